//! Exact values in `[0, ∞]`.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A nonnegative exact rational, or `+∞`.
///
/// Addition is total with `∞` absorbing; multiplication follows the measure
/// theory convention `0 · ∞ = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtReal {
    Finite(BigRational),
    Infinite,
}

impl ExtReal {
    pub fn zero() -> Self {
        ExtReal::Finite(BigRational::zero())
    }

    pub fn one() -> Self {
        ExtReal::integer(1)
    }

    pub fn integer(n: u64) -> Self {
        ExtReal::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    /// `numer / denom`; panics on a zero denominator.
    pub fn ratio(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExtReal::Finite(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Rejects negative rationals.
    pub fn finite(value: BigRational) -> Result<Self, Error> {
        if value.is_negative() {
            Err(Error::ParseValue(value.to_string()))
        } else {
            Ok(ExtReal::Finite(value))
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtReal::Finite(r) if r.is_zero())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtReal::Infinite)
    }
}

impl Default for ExtReal {
    fn default() -> Self {
        ExtReal::zero()
    }
}

impl Add for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }
}

impl<'a> Add<&'a ExtReal> for ExtReal {
    type Output = ExtReal;
    fn add(self, rhs: &'a ExtReal) -> ExtReal {
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a + b),
            _ => ExtReal::Infinite,
        }
    }
}

impl Mul for ExtReal {
    type Output = ExtReal;
    fn mul(self, rhs: ExtReal) -> ExtReal {
        if self.is_zero() || rhs.is_zero() {
            return ExtReal::zero();
        }
        match (self, rhs) {
            (ExtReal::Finite(a), ExtReal::Finite(b)) => ExtReal::Finite(a * b),
            _ => ExtReal::Infinite,
        }
    }
}

impl Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(iter: I) -> ExtReal {
        iter.fold(ExtReal::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a ExtReal> for ExtReal {
    fn sum<I: Iterator<Item = &'a ExtReal>>(iter: I) -> ExtReal {
        iter.fold(ExtReal::zero(), |acc, v| acc + v)
    }
}

/// `inf`, an integer, or a reduced fraction `n/d`.
impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Infinite => f.write_str("inf"),
            ExtReal::Finite(r) if r.is_integer() => write!(f, "{}", r.numer()),
            ExtReal::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

/// Accepts `inf`, `+inf`, `∞`, integers, fractions `n/d` and decimals `1.25`.
impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::ParseValue(s.to_string());
        let t = s.trim();
        if matches!(t, "inf" | "+inf" | "∞" | "infinity") {
            return Ok(ExtReal::Infinite);
        }
        let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
        let value = if let Some((n, d)) = t.split_once('/') {
            if !digits(n) || !digits(d) {
                return Err(bad());
            }
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            BigRational::new(n.parse().map_err(|_| bad())?, d)
        } else if let Some((whole, frac)) = t.split_once('.') {
            if !digits(whole) || !digits(frac) {
                return Err(bad());
            }
            let numer: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
            let denom = num_traits::pow(BigInt::from(10), frac.len());
            BigRational::new(numer, denom)
        } else {
            if !digits(t) {
                return Err(bad());
            }
            BigRational::from_integer(t.parse().map_err(|_| bad())?)
        };
        Ok(ExtReal::Finite(value))
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
