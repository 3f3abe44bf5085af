//! Exact sign-variation analysis for polynomials with rational coefficients.
//!
//! The crate counts sign alternations and permanences of coefficient
//! sequences under a zero-resolution convention that makes both counts
//! minimal, derives the classical root bounds that follow from them
//! (Descartes, the parity refinements, De Gua's imaginary-root bound, and
//! the Budan interval bound), checks them against a Sturm-chain oracle, and
//! uses the interval bound to isolate real roots. All arithmetic is exact.

pub mod budan;
pub mod error;
pub mod isolation;
pub mod poly;
pub mod sign_rules;
pub mod sturm;

pub use error::Error;
pub use poly::{int, rat, Polynomial, Rational};
