//! Dense polynomials and truncated power series with exact rational
//! coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ExactRational;

/// `Σ c_j x^j`, `coeffs[j] = c_j`. Trailing zeros are allowed; equality
/// ignores them.
#[derive(Debug, Clone, Default)]
pub struct ExactPoly {
    coeffs: Vec<ExactRational>,
}

impl PartialEq for ExactPoly {
    fn eq(&self, other: &Self) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|j| self.coeff(j) == other.coeff(j))
    }
}

impl Eq for ExactPoly {}

impl ExactPoly {
    pub fn new(coeffs: Vec<ExactRational>) -> Self {
        ExactPoly { coeffs }
    }

    pub fn zero() -> Self {
        ExactPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactRational) -> Self {
        ExactPoly { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// Coefficient of `x^j` (zero beyond the stored length).
    pub fn coeff(&self, j: usize) -> ExactRational {
        self.coeffs
            .get(j)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    /// Degree of the highest nonzero coefficient, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `(1 + s·x)^n` expanded with binomial coefficients built by the
    /// running product `C(n, k+1) = C(n, k)·(n-k)/(k+1)`.
    pub fn binomial_power(s: &ExactRational, n: u32) -> Self {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut binom = BigInt::one();
        let mut s_pow = ExactRational::one();
        for k in 0..=n {
            coeffs.push(ExactRational::from_integer(binom.clone()) * &s_pow);
            binom = binom * BigInt::from(n - k) / BigInt::from(k + 1);
            s_pow *= s;
        }
        ExactPoly { coeffs }
    }

    /// Divides by `x`. Returns `None` if the constant term is nonzero.
    pub fn div_x(&self) -> Option<Self> {
        match self.coeffs.first() {
            None => Some(ExactPoly::zero()),
            Some(c0) if c0.is_zero() => Some(ExactPoly {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => None,
        }
    }

    /// Antiderivative vanishing at 0.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactRational::zero());
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / ExactRational::from_integer(BigInt::from(j + 1)));
        }
        ExactPoly { coeffs }
    }

    /// `∫_0^1 p(x) dx`.
    pub fn integrate_unit(&self) -> ExactRational {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c / ExactRational::from_integer(BigInt::from(j + 1)))
            .fold(ExactRational::zero(), |acc, t| acc + t)
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// Cauchy product keeping only powers `≤ order`.
    pub fn mul_truncated(&self, other: &Self, order: usize) -> Self {
        let len = (self.coeffs.len() + other.coeffs.len())
            .saturating_sub(1)
            .min(order + 1);
        let mut coeffs = vec![ExactRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        ExactPoly { coeffs }
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly {
            coeffs: (0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect(),
        }
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        self + &(-rhs)
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        let order = (self.coeffs.len() + rhs.coeffs.len()).saturating_sub(2);
        self.mul_truncated(rhs, order)
    }
}
