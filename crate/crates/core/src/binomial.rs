//! Sums of inverse binomial coefficients and their link to `H_{n+1}(1/2)`:
//!
//! ```text
//! Σ_{p=0}^{n} 1/C(n,p) = (n+1)/2^{n+1} · Σ_{k=1}^{n+1} 2^k/k = (n+1)·H_{n+1}(1/2)
//! ```
//!
//! The identity is usually quoted with the sum starting at `p = 1`; that
//! reading drops the `1/C(n,0) = 1` term and misses the right-hand side by
//! exactly one. Both readings are checked, see [`verify_staver`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::harmonic::harmonic_like_exact;
use crate::{Error, ExactRational, Result};

/// Lower bound of the inverse binomial sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumVariant {
    FromP0,
    FromP1,
}

impl fmt::Display for SumVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SumVariant::FromP0 => "from_p0",
            SumVariant::FromP1 => "from_p1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: u32,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    /// `lhs == rhs`
    pub holds: bool,
    pub variant: SumVariant,
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Row `n` of Pascal's triangle by the running product `C(n,p+1) = C(n,p)(n-p)/(p+1)`.
pub fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    for p in 0..=n {
        row.push(c.clone());
        c = c * (n - p) / (p + 1);
    }
    row
}

/// `Σ 1/C(n,p)` for `p` from 0 (or 1) to `n`.
pub fn inverse_binomial_sum(n: u32, include_p0: bool) -> Result<ExactRational> {
    check_n(n)?;
    let skip = usize::from(!include_p0);
    Ok(binomial_row(n)
        .into_iter()
        .skip(skip)
        .map(|c| ExactRational::new(BigInt::one(), c))
        .fold(ExactRational::zero(), |acc, t| acc + t))
}

/// `(n+1)·2^{-(n+1)}·Σ_{k=1}^{n+1} 2^k/k`.
pub fn staver_rhs(n: u32) -> Result<ExactRational> {
    check_n(n)?;
    let m = n + 1;
    let sum = (1..=m)
        .map(|k| ExactRational::new(BigInt::one() << k as usize, BigInt::from(k)))
        .fold(ExactRational::zero(), |acc, t| acc + t);
    Ok(sum * ExactRational::new(BigInt::from(m), BigInt::one() << m as usize))
}

/// Compares both summation variants against [`staver_rhs`] for `n = 1..=n_max`.
///
/// Emits `FromP0` then `FromP1` for each `n`.
pub fn verify_staver(n_max: u32) -> Vec<IdentityReport> {
    let mut out = Vec::with_capacity(2 * n_max as usize);
    for n in 1..=n_max {
        let rhs = staver_rhs(n).expect("n >= 1");
        for (variant, include_p0) in [(SumVariant::FromP0, true), (SumVariant::FromP1, false)] {
            let lhs = inverse_binomial_sum(n, include_p0).expect("n >= 1");
            out.push(IdentityReport {
                n,
                holds: lhs == rhs,
                lhs,
                rhs: rhs.clone(),
                variant,
            });
        }
    }
    out
}

/// `H_{n+1}(1/2) = (1/(n+1))·Σ_{p=0}^{n} 1/C(n,p)`.
pub fn harmonic_half_from_binomials(n: u32) -> Result<ExactRational> {
    let sum = inverse_binomial_sum(n, true)?;
    Ok(sum / ExactRational::from_integer(BigInt::from(n + 1)))
}

/// `(n+1)·H_{n+1}(1/2)` straight from the harmonic definition.
pub fn staver_rhs_from_harmonic(n: u32) -> Result<ExactRational> {
    check_n(n)?;
    let half = ExactRational::new(BigInt::one(), BigInt::from(2));
    Ok(harmonic_like_exact(&half, n + 1) * ExactRational::from_integer(BigInt::from(n + 1)))
}
