//! Unevaluated sum of two `f64`s ("double-double"), giving roughly 32
//! significant decimal digits.
//!
//! Only the operations needed to run a term recurrence are provided:
//! the four field operations, negation, and the `num-traits` plumbing that
//! lets [`num_complex::Complex<TwoFold>`] do complex arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_traits::{FromPrimitive, Num, One, Zero};

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct TwoFold {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl TwoFold {
    pub const ZERO: TwoFold = TwoFold { hi: 0.0, lo: 0.0 };
    pub const ONE: TwoFold = TwoFold { hi: 1.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        TwoFold { hi: x, lo: 0.0 }
    }

    #[inline]
    fn renorm(hi: f64, lo: f64) -> Self {
        let (hi, lo) = quick_two_sum(hi, lo);
        TwoFold { hi, lo }
    }

    /// Leading component; the nearest `f64` to the represented value.
    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        Self::renorm(p, e)
    }
}

impl From<f64> for TwoFold {
    fn from(x: f64) -> Self {
        TwoFold::new(x)
    }
}

impl fmt::Display for TwoFold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {:e}", self.hi, self.lo)
    }
}

impl PartialOrd for TwoFold {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl Neg for TwoFold {
    type Output = TwoFold;
    fn neg(self) -> TwoFold {
        TwoFold {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for TwoFold {
    type Output = TwoFold;
    fn add(self, rhs: TwoFold) -> TwoFold {
        let (s1, s2) = two_sum(self.hi, rhs.hi);
        let (t1, t2) = two_sum(self.lo, rhs.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        Self::renorm(s1, s2 + t2)
    }
}

impl Sub for TwoFold {
    type Output = TwoFold;
    fn sub(self, rhs: TwoFold) -> TwoFold {
        self + (-rhs)
    }
}

impl Mul for TwoFold {
    type Output = TwoFold;
    fn mul(self, rhs: TwoFold) -> TwoFold {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        Self::renorm(p, e)
    }
}

impl Div for TwoFold {
    type Output = TwoFold;
    fn div(self, rhs: TwoFold) -> TwoFold {
        // Three-step long division, each quotient digit from the leading parts.
        let q1 = self.hi / rhs.hi;
        if !q1.is_finite() {
            return TwoFold::new(q1);
        }
        let r = self - rhs.mul_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs.mul_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (q1, q2) = quick_two_sum(q1, q2);
        TwoFold { hi: q1, lo: q2 } + TwoFold::new(q3)
    }
}

impl Rem for TwoFold {
    type Output = TwoFold;
    fn rem(self, rhs: TwoFold) -> TwoFold {
        let q = (self / rhs).to_f64().trunc();
        self - rhs.mul_f64(q)
    }
}

impl Zero for TwoFold {
    fn zero() -> Self {
        TwoFold::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for TwoFold {
    fn one() -> Self {
        TwoFold::ONE
    }
}

impl Num for TwoFold {
    type FromStrRadixErr = std::num::ParseFloatError;

    /// Parses through `f64`, so only values exactly representable as a
    /// double round-trip. The radix is ignored.
    fn from_str_radix(s: &str, _radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        s.parse::<f64>().map(TwoFold::new)
    }
}

impl FromPrimitive for TwoFold {
    fn from_i64(n: i64) -> Option<Self> {
        let hi = n as f64;
        // i64 -> f64 may round; keep the remainder in the low word.
        let lo = (n as i128 - hi as i128) as f64;
        Some(TwoFold::renorm(hi, lo))
    }

    fn from_u64(n: u64) -> Option<Self> {
        let hi = n as f64;
        let lo = (n as i128 - hi as i128) as f64;
        Some(TwoFold::renorm(hi, lo))
    }

    fn from_f64(x: f64) -> Option<Self> {
        Some(TwoFold::new(x))
    }
}
