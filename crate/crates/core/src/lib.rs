//! Harmonic-like numbers `H_n(a) = Σ_{p=1}^{n} a^{n-p}/p` and their uses.
//!
//! The crate computes `H_n(a)` by several independent routes (Horner sum,
//! recurrence, Gauss–Legendre quadrature of the integral form, exact
//! polynomial integration), evaluates the `H_n(1/2)`-weighted power series
//! of `Si(z)²`, `2cos(z)Si(z)` and their hyperbolic analogues, and checks
//! the inverse-binomial-coefficient identity for `H_{n+1}(1/2)` in exact
//! rational arithmetic.

pub mod binomial;
pub mod coefficients;
mod error;
pub mod harmonic;
pub mod poly;
pub mod quadrature;
pub mod series;
pub mod twofold;

pub use error::{Error, Result};

/// Double-precision complex scalar used for parameters `a` and points `z`.
pub type ComplexScalar = num_complex::Complex64;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Use [`num_traits::CheckedDiv`] for division that
/// must not panic on a zero divisor.
pub type ExactRational = num_rational::BigRational;

pub use binomial::{
    harmonic_half_from_binomials, inverse_binomial_sum, staver_rhs, verify_staver, IdentityReport,
    SumVariant,
};
pub use coefficients::{cauchy_product_oracle, exact_coefficients, FunctionId, SeriesCoefficients};
pub use harmonic::{
    harmonic_half, harmonic_like_direct, harmonic_like_exact, harmonic_like_sequence, integral_eq1,
    integral_eq2_exact, HalfHarmonics, HarmonicParam, HarmonicValue, Method,
};
pub use series::{
    cos_si_series, cosh_shi_series, evaluate_series, reference_value, shi_reference,
    shi_squared_series, si_reference, si_squared_series, SeriesOptions, SeriesResult,
};

/// Builds an exact rational `num/den` from machine integers.
///
/// Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> ExactRational {
    ExactRational::new(num.into(), den.into())
}
