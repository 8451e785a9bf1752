//! Exact Maclaurin coefficient tables.
//!
//! [`exact_coefficients`] builds the `H_n(1/2)`-weighted coefficients of
//!
//! ```text
//! Si(z)²         = Σ_{n≥1} (-1)^{n+1} H_{2n}(1/2)   (2z)^{2n}   / ((2n)!·2n)
//! 2cos(z)Si(z)   = Σ_{n≥1} (-1)^{n+1} H_{2n-1}(1/2) (2z)^{2n-1} / (2n-1)!
//! Shi(z)²        = Σ_{n≥1}            H_{2n}(1/2)   (2z)^{2n}   / ((2n)!·2n)
//! 2cosh(z)Shi(z) = Σ_{n≥1}            H_{2n-1}(1/2) (2z)^{2n-1} / (2n-1)!
//! ```
//!
//! while [`cauchy_product_oracle`] reaches the same tables with no harmonic
//! numbers at all, multiplying the elementary Maclaurin series together.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::harmonic::harmonic_like_exact;
use crate::poly::ExactPoly;
use crate::{Error, ExactRational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionId {
    /// `Si(z)²`
    Si2,
    /// `2cos(z)·Si(z)`
    CosSi,
    /// `Shi(z)²`
    Shi2,
    /// `2cosh(z)·Shi(z)`
    CoshShi,
    /// `Si(z)` itself
    SiRef,
    /// `Shi(z)` itself
    ShiRef,
}

impl FunctionId {
    pub const ALL: [FunctionId; 6] = [
        FunctionId::Si2,
        FunctionId::CosSi,
        FunctionId::Shi2,
        FunctionId::CoshShi,
        FunctionId::SiRef,
        FunctionId::ShiRef,
    ];

    /// The four `H_n(1/2)` expansions.
    pub const HARMONIC_WEIGHTED: [FunctionId; 4] = [
        FunctionId::Si2,
        FunctionId::CosSi,
        FunctionId::Shi2,
        FunctionId::CoshShi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctionId::Si2 => "si2",
            FunctionId::CosSi => "cos_si",
            FunctionId::Shi2 => "shi2",
            FunctionId::CoshShi => "cosh_shi",
            FunctionId::SiRef => "si_ref",
            FunctionId::ShiRef => "shi_ref",
        }
    }

    pub fn is_hyperbolic(self) -> bool {
        matches!(
            self,
            FunctionId::Shi2 | FunctionId::CoshShi | FunctionId::ShiRef
        )
    }

    /// Power of `z` carried by the `k`-th coefficient (`k ≥ 1`).
    pub fn power(self, k: u32) -> u32 {
        match self {
            FunctionId::Si2 | FunctionId::Shi2 => 2 * k,
            _ => 2 * k - 1,
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "si2" => FunctionId::Si2,
            "cos_si" | "cossi" => FunctionId::CosSi,
            "shi2" => FunctionId::Shi2,
            "cosh_shi" | "coshshi" => FunctionId::CoshShi,
            "si_ref" | "si" => FunctionId::SiRef,
            "shi_ref" | "shi" => FunctionId::ShiRef,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown function id {other:?}"
                )))
            }
        })
    }
}

/// Exact `(power, coefficient)` pairs of a series, ascending by power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesCoefficients {
    pub function_id: FunctionId,
    pub coefficients: Vec<(u32, ExactRational)>,
}

impl SeriesCoefficients {
    pub fn get(&self, power: u32) -> Option<&ExactRational> {
        self.coefficients
            .iter()
            .find(|(p, _)| *p == power)
            .map(|(_, c)| c)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }
}

fn check_n_max(n_max: u32) -> Result<()> {
    if n_max == 0 {
        Err(Error::InvalidArgument("n_max must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `[0!, 1!, …, m!]`
fn factorials(m: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut f = BigInt::one();
    out.push(f.clone());
    for k in 1..=m {
        f *= k;
        out.push(f.clone());
    }
    out
}

fn sign(alternating: bool, k: u32) -> ExactRational {
    if alternating && k % 2 == 1 {
        -ExactRational::one()
    } else {
        ExactRational::one()
    }
}

/// The first `n_max` nonzero coefficients of `function_id`, weights built
/// from exact `H_k(1/2)`.
pub fn exact_coefficients(function_id: FunctionId, n_max: u32) -> Result<SeriesCoefficients> {
    check_n_max(n_max)?;
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    let alternating = !function_id.is_hyperbolic();
    let fact = factorials(2 * n_max + 1);
    let coefficients = (1..=n_max)
        .map(|n| {
            let power = function_id.power(n);
            let coeff = match function_id {
                FunctionId::Si2 | FunctionId::Shi2 => {
                    // (-1)^{n+1} 4^n H_{2n}(1/2) / ((2n)!·2n)
                    let m = 2 * n;
                    let num = BigInt::one() << (2 * n as usize);
                    let den = &fact[m as usize] * BigInt::from(m);
                    sign(alternating, n + 1)
                        * harmonic_like_exact(&half, m)
                        * ExactRational::new(num, den)
                }
                FunctionId::CosSi | FunctionId::CoshShi => {
                    // (-1)^{n+1} 2^{2n-1} H_{2n-1}(1/2) / (2n-1)!
                    let m = 2 * n - 1;
                    let num = BigInt::one() << m as usize;
                    sign(alternating, n + 1)
                        * harmonic_like_exact(&half, m)
                        * ExactRational::new(num, fact[m as usize].clone())
                }
                FunctionId::SiRef | FunctionId::ShiRef => {
                    // (-1)^k / ((2k+1)·(2k+1)!), k = n - 1
                    let m = 2 * n - 1;
                    let den = &fact[m as usize] * BigInt::from(m);
                    sign(alternating, n - 1) * ExactRational::new(BigInt::one(), den)
                }
            };
            (power, coeff)
        })
        .collect();
    Ok(SeriesCoefficients {
        function_id,
        coefficients,
    })
}

/// Maclaurin polynomials of `sin` and `cos` (or `sinh`, `cosh`) through `x^order`.
fn trig_polys(hyperbolic: bool, order: u32) -> (ExactPoly, ExactPoly) {
    let mut sin = vec![ExactRational::zero(); order as usize + 1];
    let mut cos = vec![ExactRational::zero(); order as usize + 1];
    let mut term = ExactRational::one();
    for j in 0..=order {
        // term = ±x^j / j!
        if j % 2 == 0 {
            cos[j as usize] = term.clone();
        } else {
            sin[j as usize] = term.clone();
        }
        term /= ExactRational::from_integer(BigInt::from(j + 1));
        if !hyperbolic && j % 2 == 1 {
            term = -term;
        }
    }
    (ExactPoly::new(sin), ExactPoly::new(cos))
}

/// `∫_0^z sin(x)/x dx` (or `sinh`) as a polynomial through `z^order`.
fn integral_sine_poly(hyperbolic: bool, order: u32) -> ExactPoly {
    let (sin, _) = trig_polys(hyperbolic, order);
    sin.div_x().expect("sin has no constant term").integral()
}

/// Same tables as [`exact_coefficients`], computed without harmonic
/// numbers: `Si·Si`, `2cos·Si` and their hyperbolic analogues as exact
/// Cauchy products, and `Si`, `Shi` by integrating `sin(x)/x` term by term.
pub fn cauchy_product_oracle(function_id: FunctionId, n_max: u32) -> Result<SeriesCoefficients> {
    check_n_max(n_max)?;
    let hyperbolic = function_id.is_hyperbolic();
    let order = function_id.power(n_max);
    let si = integral_sine_poly(hyperbolic, order);
    let product = match function_id {
        FunctionId::Si2 | FunctionId::Shi2 => si.mul_truncated(&si, order as usize),
        FunctionId::CosSi | FunctionId::CoshShi => {
            let (_, cos) = trig_polys(hyperbolic, order);
            let two_cos = cos.scale(&ExactRational::from_integer(BigInt::from(2)));
            two_cos.mul_truncated(&si, order as usize)
        }
        FunctionId::SiRef | FunctionId::ShiRef => si,
    };
    let coefficients = (1..=n_max)
        .map(|k| {
            let power = function_id.power(k);
            (power, product.coeff(power as usize))
        })
        .collect();
    Ok(SeriesCoefficients {
        function_id,
        coefficients,
    })
}
