use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::Rational;

/// The integral Weierstrass model `y^2 = x^3 + a2*x^2 + a1*x + a0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct EllipticCurve {
    pub a2: i64,
    pub a1: i64,
    pub a0: i64,
}

/// A rational point of an [`EllipticCurve`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl ECPoint {
    pub fn affine(x: impl Into<Rational>, y: impl Into<Rational>) -> Self {
        ECPoint::Affine {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rational> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { y, .. } => Some(y),
        }
    }

    pub fn neg(&self) -> ECPoint {
        match self {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "inf"),
            ECPoint::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

impl fmt::Debug for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Points serialize as `"inf"` or `["x", "y"]`.
impl Serialize for ECPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ECPoint::Infinity => serializer.serialize_str("inf"),
            ECPoint::Affine { x, y } => (x, y).serialize(serializer),
        }
    }
}

impl EllipticCurve {
    /// Rejects curves whose cubic has a repeated root.
    pub fn new(a2: i64, a1: i64, a0: i64) -> Result<Self> {
        let c = EllipticCurve { a2, a1, a0 };
        if c.discriminant() == BigInt::from(0) {
            return Err(Error::SingularCurve(c.to_string()));
        }
        Ok(c)
    }

    /// Discriminant of the cubic `x^3 + a2 x^2 + a1 x + a0`:
    /// `a2^2 a1^2 - 4 a1^3 - 4 a2^3 a0 - 27 a0^2 + 18 a2 a1 a0`.
    pub fn discriminant(&self) -> BigInt {
        let a = BigInt::from(self.a2);
        let b = BigInt::from(self.a1);
        let c = BigInt::from(self.a0);
        &a * &a * &b * &b - 4 * &b * &b * &b - 4 * &a * &a * &a * &c - 27 * &c * &c
            + 18 * &a * &b * &c
    }

    /// `x^3 + a2 x^2 + a1 x + a0`.
    pub fn rhs(&self, x: &Rational) -> Rational {
        let a2 = Rational::from(self.a2);
        let a1 = Rational::from(self.a1);
        let a0 = Rational::from(self.a0);
        ((x + &a2) * x + a1) * x + a0
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y.square() == self.rhs(x),
        }
    }

    fn check(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(format!("{p} on {self}")))
        }
    }

    /// Chord-and-tangent addition with the point at infinity as identity.
    pub fn add(&self, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let a2 = Rational::from(self.a2);
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return ECPoint::Infinity;
            }
            // tangent: (3x^2 + 2 a2 x + a1) / 2y
            let num = Rational::from(3) * x1.square()
                + Rational::from(2) * &a2 * x1
                + Rational::from(self.a1);
            num / (Rational::from(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = slope.square() - &a2 - x1 - x2;
        let y3 = &slope * &(x1 - &x3) - y1;
        ECPoint::Affine { x: x3, y: y3 }
    }

    /// `n * p` by double-and-add.
    pub fn mul(&self, p: &ECPoint, n: u64) -> Result<ECPoint> {
        self.check(p)?;
        let mut acc = ECPoint::Infinity;
        let mut base = p.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            n >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `n <= max` with `n * p = O`, found by repeated addition.
    pub fn order(&self, p: &ECPoint, max: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut acc = p.clone();
        for n in 1..=max {
            if acc.is_infinity() {
                return Ok(Some(n));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        for (c, mono) in [(self.a2, "x^2"), (self.a1, "x"), (self.a0, "")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { '-' } else { '+' };
            let abs = c.unsigned_abs();
            if abs == 1 && !mono.is_empty() {
                write!(f, " {sign} {mono}")?;
            } else {
                write!(f, " {sign} {abs}{mono}")?;
            }
        }
        Ok(())
    }
}
