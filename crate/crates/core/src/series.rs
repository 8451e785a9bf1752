//! Power series of `Si(z)²`, `2cos(z)Si(z)`, `Shi(z)²` and `2cosh(z)Shi(z)`
//! with `H_k(1/2)` weights, plus Maclaurin references for `Si` and `Shi`.
//!
//! Terms are produced by a multiplicative update (no factorial is formed)
//! and accumulated in double-double arithmetic: at `|z| = 10` single terms
//! of `2cos(z)Si(z)` reach `~5·10^6` against a sum of order one, which
//! leaves too few digits in plain `f64`.

use num_complex::Complex;
use num_traits::{FromPrimitive, Zero};

use crate::coefficients::FunctionId;
use crate::harmonic::HalfHarmonics;
use crate::twofold::TwoFold;
use crate::{ComplexScalar, Error, Result};

type WideComplex = Complex<TwoFold>;

pub const DEFAULT_MAX_TERMS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesOptions {
    /// Relative truncation threshold, in `(0, 1)`.
    pub tol: f64,
    /// Hard cap on terms; reaching it yields `converged = false`.
    pub max_terms: usize,
}

impl Default for SeriesOptions {
    fn default() -> Self {
        SeriesOptions {
            tol: 1e-14,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

impl SeriesOptions {
    pub fn with_tol(tol: f64) -> Self {
        SeriesOptions {
            tol,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "tol must lie in (0, 1), got {}",
                self.tol
            )));
        }
        if self.max_terms == 0 {
            return Err(Error::InvalidArgument("max_terms must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: ComplexScalar,
    pub terms_used: usize,
    pub last_term_magnitude: f64,
    /// Two consecutive terms fell below `tol·max(1, |partial|)`.
    pub converged: bool,
}

fn check_z(z: ComplexScalar) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite("z"))
    }
}

fn widen(z: ComplexScalar) -> WideComplex {
    Complex::new(TwoFold::new(z.re), TwoFold::new(z.im))
}

fn narrow(z: WideComplex) -> ComplexScalar {
    ComplexScalar::new(z.re.to_f64(), z.im.to_f64())
}

fn wide_int(k: usize) -> TwoFold {
    TwoFold::from_usize(k).expect("integer fits a double-double")
}

/// `Σ_{k≥0} s^k z^{2k+1} / ((2k+1)·(2k+1)!)` with `s = -1` for `Si`, `+1` for `Shi`.
fn integral_sine(z: ComplexScalar, sign: f64) -> ComplexScalar {
    const THRESHOLD: f64 = 1e-17;
    const MAX_TERMS: usize = 10_000;
    let z2 = z * z * sign;
    // power = s^k z^{2k+1} / (2k+1)!
    let mut power = z;
    let mut sum = ComplexScalar::zero();
    let mut small = 0;
    for k in 0..MAX_TERMS {
        let m = (2 * k + 1) as f64;
        let term = power / m;
        sum += term;
        if !term.is_finite() {
            break;
        }
        if term.norm() < THRESHOLD * sum.norm().max(1.0) {
            small += 1;
            if small == 2 {
                break;
            }
        } else {
            small = 0;
        }
        power = power * z2 / ((m + 1.0) * (m + 2.0));
    }
    sum
}

/// `Si(z)` from its Maclaurin series. Independent of `H_n(1/2)`.
pub fn si_reference(z: ComplexScalar) -> Result<ComplexScalar> {
    check_z(z)?;
    Ok(integral_sine(z, -1.0))
}

/// `Shi(z)` from its Maclaurin series.
pub fn shi_reference(z: ComplexScalar) -> Result<ComplexScalar> {
    check_z(z)?;
    Ok(integral_sine(z, 1.0))
}

/// Closed-form product that `function_id` expands, built from the
/// Maclaurin references and the standard `cos`/`cosh`.
pub fn reference_value(function_id: FunctionId, z: ComplexScalar) -> Result<ComplexScalar> {
    Ok(match function_id {
        FunctionId::Si2 => si_reference(z)?.powi(2),
        FunctionId::CosSi => 2.0 * z.cos() * si_reference(z)?,
        FunctionId::Shi2 => shi_reference(z)?.powi(2),
        FunctionId::CoshShi => 2.0 * z.cosh() * shi_reference(z)?,
        FunctionId::SiRef => si_reference(z)?,
        FunctionId::ShiRef => shi_reference(z)?,
    })
}

/// Sums one of the four `H_k(1/2)` expansions at `z`.
///
/// The `n`-th term is `c_n·(2z)^{m}/m!·H_m(1/2)` (times `1/m` for the
/// squared functions), with `m = 2n` for the squares and `2n - 1` for the
/// cosine products. `(2z)^m/m!` is carried from term to term by the factor
/// `±(2z)²/(m(m-1))`, and `H_m(1/2)` by the halving recurrence.
pub fn evaluate_series(
    function_id: FunctionId,
    z: ComplexScalar,
    options: &SeriesOptions,
) -> Result<SeriesResult> {
    check_z(z)?;
    options.validate()?;
    let (squared, sign) = match function_id {
        FunctionId::Si2 => (true, -1.0),
        FunctionId::CosSi => (false, -1.0),
        FunctionId::Shi2 => (true, 1.0),
        FunctionId::CoshShi => (false, 1.0),
        FunctionId::SiRef | FunctionId::ShiRef => {
            return Err(Error::InvalidArgument(format!(
                "{function_id} has no harmonic-weighted expansion"
            )))
        }
    };

    let two_z = widen(z * 2.0);
    let step = two_z * two_z * TwoFold::new(sign);
    // (2z)^m / m! for the first term
    let mut power = if squared {
        step * TwoFold::new(sign) / TwoFold::new(2.0)
    } else {
        two_z
    };
    let mut halves = HalfHarmonics::<TwoFold>::new();
    let mut sum = WideComplex::zero();
    let mut small = 0;
    let mut last = 0.0;
    let mut terms_used = 0;
    let mut converged = false;

    for n in 1..=options.max_terms {
        let m = if squared { 2 * n } else { 2 * n - 1 };
        let h_odd = halves.next().expect("halving recurrence is unbounded");
        let weight = if squared {
            let h_even = halves.next().expect("halving recurrence is unbounded");
            h_even / wide_int(m)
        } else {
            halves.next();
            h_odd
        };
        let term = power * weight;
        sum = sum + term;
        terms_used = n;
        last = narrow(term).norm();
        if !last.is_finite() {
            break;
        }
        if last < options.tol * narrow(sum).norm().max(1.0) {
            small += 1;
            if small == 2 {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
        let denom = wide_int(m + 1) * wide_int(m + 2);
        power = power * step / denom;
    }

    Ok(SeriesResult {
        value: narrow(sum),
        terms_used,
        last_term_magnitude: last,
        converged,
    })
}

/// `Si(z)²` from its `H_{2n}(1/2)` expansion; at most 500 terms.
pub fn si_squared_series(z: ComplexScalar, tol: f64) -> Result<SeriesResult> {
    evaluate_series(FunctionId::Si2, z, &SeriesOptions::with_tol(tol))
}

/// `2cos(z)·Si(z)` from its `H_{2n-1}(1/2)` expansion.
pub fn cos_si_series(z: ComplexScalar, tol: f64) -> Result<SeriesResult> {
    evaluate_series(FunctionId::CosSi, z, &SeriesOptions::with_tol(tol))
}

/// `Shi(z)²`; same weights as `Si(z)²` with every sign positive.
pub fn shi_squared_series(z: ComplexScalar, tol: f64) -> Result<SeriesResult> {
    evaluate_series(FunctionId::Shi2, z, &SeriesOptions::with_tol(tol))
}

/// `2cosh(z)·Shi(z)`; same weights as `2cos(z)Si(z)` with every sign positive.
pub fn cosh_shi_series(z: ComplexScalar, tol: f64) -> Result<SeriesResult> {
    evaluate_series(FunctionId::CoshShi, z, &SeriesOptions::with_tol(tol))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexScalar {
        ComplexScalar::new(re, im)
    }

    #[test]
    fn references_at_zero_and_parity() {
        assert_eq!(si_reference(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        assert_eq!(shi_reference(c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let a = si_reference(c(1.0, 0.0)).unwrap();
        let b = si_reference(c(-1.0, 0.0)).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn shi_of_imaginary_is_i_si() {
        for y in [0.3, 1.0, 2.5, 7.0] {
            let lhs = shi_reference(c(0.0, y)).unwrap();
            let rhs = c(0.0, 1.0) * si_reference(c(y, 0.0)).unwrap();
            assert!((lhs - rhs).norm() < 1e-14 * rhs.norm().max(1.0), "y = {y}");
        }
    }

    #[test]
    fn series_at_zero() {
        for id in FunctionId::HARMONIC_WEIGHTED {
            let r = evaluate_series(id, c(0.0, 0.0), &SeriesOptions::default()).unwrap();
            assert_eq!(r.value, c(0.0, 0.0));
            assert!(r.converged);
            assert_eq!(r.terms_used, 2);
        }
    }

    #[test]
    fn leading_terms_for_small_z() {
        // Si(z)² = z² + O(z⁴), 2cos(z)Si(z) = 2z + O(z³)
        let z = c(1e-5, 0.0);
        let r = si_squared_series(z, 1e-15).unwrap();
        assert!((r.value.re / 1e-10 - 1.0).abs() < 1e-9);
        let r = cos_si_series(z, 1e-15).unwrap();
        assert!((r.value.re / 2e-5 - 1.0).abs() < 1e-9);
        let r = cosh_shi_series(z, 1e-15).unwrap();
        assert!((r.value.re / 2e-5 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn bad_arguments() {
        assert_eq!(
            si_squared_series(c(f64::NAN, 0.0), 1e-10),
            Err(Error::NonFinite("z"))
        );
        assert!(si_squared_series(c(1.0, 0.0), 0.0).is_err());
        assert!(si_squared_series(c(1.0, 0.0), 1.0).is_err());
        assert!(si_squared_series(c(1.0, 0.0), f64::NAN).is_err());
        assert!(
            evaluate_series(FunctionId::SiRef, c(1.0, 0.0), &SeriesOptions::default()).is_err()
        );
        let opts = SeriesOptions {
            tol: 1e-3,
            max_terms: 0,
        };
        assert!(evaluate_series(FunctionId::Si2, c(1.0, 0.0), &opts).is_err());
        assert!(si_reference(c(0.0, f64::INFINITY)).is_err());
    }

    #[test]
    fn hard_cap_reports_unconverged() {
        let opts = SeriesOptions {
            tol: 1e-14,
            max_terms: 5,
        };
        let r = evaluate_series(FunctionId::CosSi, c(10.0, 0.0), &opts).unwrap();
        assert!(!r.converged);
        assert_eq!(r.terms_used, 5);
    }

    #[test]
    fn huge_argument_does_not_panic() {
        let r =
            evaluate_series(FunctionId::Shi2, c(400.0, 0.0), &SeriesOptions::default()).unwrap();
        assert!(!r.converged);
        assert!(r.terms_used <= DEFAULT_MAX_TERMS);
    }
}
