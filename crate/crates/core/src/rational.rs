//! Exact rational scalars.
//!
//! Values are kept in lowest terms with a positive denominator. All
//! arithmetic goes through `i128` intermediates and is checked: a result
//! that does not fit back into `i64` after reduction panics with
//! [`OVERFLOW`] instead of wrapping. The `checked_*` methods expose the same
//! operations without panicking.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::LinkageError;

pub(crate) const OVERFLOW: &str = "rational arithmetic overflowed i64 after reduction";

/// An exact fraction `numer / denom` with `denom > 0` and `gcd(numer, denom) = 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { numer: 0, denom: 1 };
    pub const ONE: Rational = Rational { numer: 1, denom: 1 };

    /// Builds `numer / denom`, reducing to lowest terms.
    ///
    /// Panics when `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        Self::reduce(numer as i128, denom as i128).expect(OVERFLOW)
    }

    pub const fn from_int(n: i64) -> Self {
        Rational { numer: n, denom: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer == 0
    }

    pub fn is_integer(&self) -> bool {
        self.denom == 1
    }

    pub fn abs(self) -> Self {
        Rational {
            numer: self.numer.checked_abs().expect(OVERFLOW),
            denom: self.denom,
        }
    }

    pub fn signum(&self) -> i64 {
        self.numer.signum()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(self) -> Option<Self> {
        if self.numer == 0 {
            return None;
        }
        Self::reduce(self.denom as i128, self.numer as i128)
    }

    fn reduce(n: i128, d: i128) -> Option<Self> {
        if d == 0 {
            return None;
        }
        let g = n.gcd(&d);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (n / g, d / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        Some(Rational {
            numer: i64::try_from(n).ok()?,
            denom: i64::try_from(d).ok()?,
        })
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        let n =
            (self.numer as i128) * (rhs.denom as i128) + (rhs.numer as i128) * (self.denom as i128);
        Self::reduce(n, (self.denom as i128) * (rhs.denom as i128))
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        // cross-reduce first so that products of reduced fractions stay small
        let g1 = (self.numer as i128).gcd(&(rhs.denom as i128)).max(1);
        let g2 = (rhs.numer as i128).gcd(&(self.denom as i128)).max(1);
        let n = (self.numer as i128 / g1) * (rhs.numer as i128 / g2);
        let d = (self.denom as i128 / g2) * (rhs.denom as i128 / g1);
        Self::reduce(n, d)
    }

    pub fn checked_div(self, rhs: Self) -> Option<Self> {
        self.checked_mul(rhs.recip()?)
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(Rational {
            numer: self.numer.checked_neg()?,
            denom: self.denom,
        })
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i64)
    }
}

impl From<i8> for Rational {
    fn from(n: i8) -> Self {
        Rational::from_int(n as i64)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect(OVERFLOW)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect(OVERFLOW)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect(OVERFLOW)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "division by zero rational");
        self.checked_div(rhs).expect(OVERFLOW)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        self.checked_neg().expect(OVERFLOW)
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = (self.numer as i128) * (other.denom as i128);
        let rhs = (other.numer as i128) * (self.denom as i128);
        lhs.cmp(&rhs)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = LinkageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || LinkageError::Parse(format!("invalid rational {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i64>().map(Rational::from_int).map_err(|_| bad()),
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                if d == 0 {
                    return Err(bad());
                }
                Rational::reduce(n as i128, d as i128).ok_or_else(bad)
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
