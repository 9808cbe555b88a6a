use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{rat_is_square, QuadVal, Rational};
use crate::error::{Error, Result};

/// A positive length whose square is rational, such as `3/2` or `sqrt(13)`.
///
/// Triangles like the 30-60-90 tile or biquadratic tiles have irrational
/// sides but rational squared sides, which is all SSS congruence needs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SideLength {
    sq: Rational,
}

impl SideLength {
    pub fn from_square(sq: Rational) -> Result<Self> {
        if !sq.is_positive() {
            return Err(Error::InvalidInput(format!(
                "squared length {sq} must be positive"
            )));
        }
        Ok(SideLength { sq })
    }

    pub fn rational(len: Rational) -> Result<Self> {
        if !len.is_positive() {
            return Err(Error::InvalidInput(format!(
                "length {len} must be positive"
            )));
        }
        Ok(SideLength { sq: len.square() })
    }

    pub fn squared(&self) -> &Rational {
        &self.sq
    }

    pub fn as_rational(&self) -> Option<Rational> {
        rat_is_square(&self.sq)
    }

    pub fn to_quad(&self) -> QuadVal {
        QuadVal::sqrt_of(&self.sq).expect("positive square")
    }

    pub fn to_f64(&self) -> f64 {
        self.sq.to_f64().sqrt()
    }

    pub fn scale(&self, k: &Rational) -> Result<Self> {
        Self::from_square(&self.sq * &k.square())
    }
}

impl PartialOrd for SideLength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SideLength {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sq.cmp(&other.sq)
    }
}

impl fmt::Display for SideLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "sqrt({})", self.sq),
        }
    }
}

impl fmt::Debug for SideLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SideLength {
    type Err = Error;

    /// `p`, `p/q` or `sqrt(p/q)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
            Self::from_square(inner.parse()?)
        } else {
            Self::rational(s.parse()?)
        }
    }
}

impl Serialize for SideLength {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SideLength {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
