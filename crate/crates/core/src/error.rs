use crate::poly::Rational;
use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("zero polynomial has no defined root structure")]
    ZeroPolynomial,

    #[error("operation requires a polynomial of degree at least 1")]
    ConstantPolynomial,

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeroPolynomials,

    #[error("invalid interval: left endpoint {a} exceeds right endpoint {b}")]
    IntervalOutOfOrder { a: Rational, b: Rational },

    #[error("left endpoint is a root")]
    LeftEndpointIsRoot,

    #[error("sign assignment covers {got} coefficients but the polynomial has {expected} non-trailing zero coefficients")]
    AssignmentLengthMismatch { expected: usize, got: usize },

    #[error("evaluation points must be sorted in ascending order")]
    UnsortedPoints,

    #[error("derivative sign sequences have different lengths ({left} vs {right})")]
    SequenceLengthMismatch { left: usize, right: usize },

    #[error("n-th derivative not of constant sign")]
    LeadingEntryNotConstantSign,

    #[error("derivative sign sequence points must be strictly increasing")]
    SequencePointsOutOfOrder,

    #[error("inconsistent input: derivative sign sequences violate the variation-bound preconditions")]
    InconsistentSignSequences,

    #[error("refinement width must be positive")]
    NonPositiveWidth,

    #[error("interval does not isolate a root of this polynomial")]
    NotAnIsolatingInterval,

    #[error("bisection depth cap of {cap} exceeded")]
    DepthCapExceeded { cap: usize },
}
