//! Front end for `harmlike-core`: tables of `H_n(a)`, identity suites,
//! series-versus-reference comparisons and exact coefficient dumps, written
//! as CSV or JSON.

pub mod commands;
pub mod literal;
pub mod output;
pub mod verify;

pub use literal::parse_complex;
pub use output::{format_float, format_rational, write_records, Field, Format, Record};
pub use verify::{run_verify, CoefficientSource, HarmonicCoefficients, Suite, VerifyReport};
