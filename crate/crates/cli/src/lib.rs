//! Library half of the `polysign` binary: input parsing, the report
//! document, and the command implementations, kept callable so the
//! integration tests can exercise them in-process.

pub mod document;
pub mod parse;
pub mod run;
