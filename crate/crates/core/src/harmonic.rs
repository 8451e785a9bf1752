//! Harmonic-like numbers `H_n(a) = ∫_0^1 (a^n - t^n)/(a - t) dt
//! = a^{n-1} + a^{n-2}/2 + … + 1/n`.
//!
//! `H_0(a)` is the empty sum, 0. At `a = 1` these are the classical
//! harmonic numbers.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Num, One, Zero};

use crate::poly::ExactPoly;
use crate::quadrature::GaussLegendre;
use crate::{ComplexScalar, Error, ExactRational, Result};

/// The pair `(a, n)` indexing `H_n(a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicParam {
    a: ComplexScalar,
    n: u32,
}

/// Route used to compute a [`HarmonicValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Horner evaluation of the finite sum.
    Direct,
    /// `H_n = a·H_{n-1} + 1/n` from `H_0 = 0`.
    Recurrence,
    /// Gauss–Legendre quadrature of `∫_0^1 (a^n - t^n)/(a - t) dt`; real `a` only.
    IntegralEq1,
    /// Exact integration of `2^{-n} ∫_0^1 ((1+x)^n - (1-x)^n)/x dx`; `a = 1/2` only.
    IntegralEq2,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Recurrence => "recurrence",
            Method::IntegralEq1 => "integral_eq1",
            Method::IntegralEq2 => "integral_eq2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HarmonicValue {
    pub param: HarmonicParam,
    pub value: ComplexScalar,
    pub method: Method,
}

fn check_finite(a: ComplexScalar) -> Result<()> {
    if a.re.is_finite() && a.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite("a"))
    }
}

/// Smallest Gauss–Legendre rule that integrates a degree `n - 1` polynomial exactly.
pub fn min_nodes(n: u32) -> usize {
    n.div_ceil(2) as usize + 1
}

impl HarmonicParam {
    pub fn new(a: ComplexScalar, n: u32) -> Result<Self> {
        check_finite(a)?;
        Ok(HarmonicParam { a, n })
    }

    pub fn a(&self) -> ComplexScalar {
        self.a
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn evaluate(&self, method: Method) -> Result<HarmonicValue> {
        let value = match method {
            Method::Direct => harmonic_like_direct(self.a, self.n)?,
            Method::Recurrence => harmonic_like_sequence(self.a, self.n)?
                .last()
                .copied()
                .unwrap_or_else(ComplexScalar::zero),
            Method::IntegralEq1 => {
                if self.a.im != 0.0 {
                    return Err(Error::InvalidArgument(
                        "quadrature of the integral form needs real a".into(),
                    ));
                }
                integral_eq1(self.a.re, self.n, min_nodes(self.n))?.into()
            }
            Method::IntegralEq2 => {
                if self.a != ComplexScalar::new(0.5, 0.0) {
                    return Err(Error::InvalidArgument(
                        "the (1+x)^n - (1-x)^n form only represents a = 1/2".into(),
                    ));
                }
                let exact = integral_eq2_exact(self.n)?;
                rational_to_f64(&exact).into()
            }
        };
        Ok(HarmonicValue {
            param: *self,
            value,
            method,
        })
    }
}

pub(crate) fn rational_to_f64(q: &ExactRational) -> f64 {
    num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
}

/// `Σ_{p=1}^{n} a^{n-p}/p` by Horner's scheme from the `a^{n-1}` coefficient down.
pub fn harmonic_like_direct(a: ComplexScalar, n: u32) -> Result<ComplexScalar> {
    check_finite(a)?;
    let mut value = ComplexScalar::zero();
    for p in 1..=n {
        value = value * a + 1.0 / p as f64;
    }
    Ok(value)
}

/// `[H_1(a), …, H_{n_max}(a)]` via `H_n = a·H_{n-1} + 1/n`.
pub fn harmonic_like_sequence(a: ComplexScalar, n_max: u32) -> Result<Vec<ComplexScalar>> {
    check_finite(a)?;
    let mut out = Vec::with_capacity(n_max as usize);
    let mut h = ComplexScalar::zero();
    for n in 1..=n_max {
        h = a * h + 1.0 / n as f64;
        out.push(h);
    }
    Ok(out)
}

/// Exact `H_n(a)` for rational `a`.
pub fn harmonic_like_exact(a: &ExactRational, n: u32) -> ExactRational {
    let mut value = ExactRational::zero();
    for p in 1..=n {
        value = value * a + ExactRational::new(BigInt::one(), BigInt::from(p));
    }
    value
}

/// Iterator over `H_1(1/2), H_2(1/2), …` using `H_n = H_{n-1}/2 + 1/n`.
///
/// Generic so the same recurrence can run in `f64` or in extended precision.
#[derive(Debug, Clone)]
pub struct HalfHarmonics<T> {
    h: T,
    n: u64,
}

impl<T: Num + Clone> HalfHarmonics<T> {
    pub fn new() -> Self {
        HalfHarmonics { h: T::zero(), n: 0 }
    }
}

impl<T: Num + Clone> Default for HalfHarmonics<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Num + Clone + FromPrimitive> Iterator for HalfHarmonics<T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        self.n += 1;
        let two = T::one() + T::one();
        let n = T::from_u64(self.n)?;
        self.h = self.h.clone() / two + T::one() / n;
        Some(self.h.clone())
    }
}

/// `H_n(1/2)` by the halving recurrence; never forms `2^k`.
pub fn harmonic_half(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    HalfHarmonics::<f64>::new()
        .nth((n - 1) as usize)
        .unwrap_or(f64::NAN)
}

/// `∫_0^1 (a^n - t^n)/(a - t) dt` by `nodes`-point Gauss–Legendre quadrature.
///
/// Requires `nodes ≥ ⌈n/2⌉ + 1` so the rule is exact for the degree `n - 1`
/// polynomial behind the quotient. Nodes with `|a - t| < 2^-40·max(1, |a|)`
/// use the polynomial form `Σ_j a^{n-1-j} t^j`, since the quotient loses all
/// digits near the removable singularity.
pub fn integral_eq1(a: f64, n: u32, nodes: usize) -> Result<f64> {
    if !a.is_finite() {
        return Err(Error::NonFinite("a"));
    }
    let needed = min_nodes(n);
    if nodes < needed {
        return Err(Error::InvalidArgument(format!(
            "{nodes} quadrature nodes cannot integrate degree {} exactly (need {needed})",
            n.saturating_sub(1)
        )));
    }
    if n == 0 {
        return Ok(0.0);
    }
    let rule = GaussLegendre::new(nodes)?;
    let delta = (-40f64).exp2() * a.abs().max(1.0);
    let an = a.powi(n as i32);
    Ok(rule.integrate(0.0, 1.0, |t| {
        if (a - t).abs() < delta {
            // Σ_{j=0}^{n-1} a^{n-1-j} t^j, Horner in a
            (0..n).fold(0.0, |acc, j| acc * a + t.powi(j as i32))
        } else {
            (an - t.powi(n as i32)) / (a - t)
        }
    }))
}

/// Exact `2^{-n} ∫_0^1 ((1+x)^n - (1-x)^n)/x dx`, which equals `H_n(1/2)`.
pub fn integral_eq2_exact(n: u32) -> Result<ExactRational> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "the (1+x)^n - (1-x)^n integral is defined for n >= 1".into(),
        ));
    }
    let plus = ExactPoly::binomial_power(&ExactRational::one(), n);
    let minus = ExactPoly::binomial_power(&-ExactRational::one(), n);
    let integrand = (&plus - &minus)
        .div_x()
        .expect("constant terms of (1+x)^n and (1-x)^n cancel");
    let scale = ExactRational::new(BigInt::one(), BigInt::one() << n as usize);
    Ok(integrand.integrate_unit() * scale)
}
