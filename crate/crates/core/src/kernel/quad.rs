use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};

use super::arith::{is_squarefree, squarefree_part_big};
use super::Rational;
use crate::error::{Error, Result};

/// An element `rat + surd * sqrt(disc)` of the real quadratic field Q(sqrt(disc)).
///
/// Rational values (`surd == 0`) always carry `disc == 1`, so they combine
/// with values of any discriminant and compare structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadVal {
    rat: Rational,
    surd: Rational,
    disc: u64,
}

impl QuadVal {
    /// Builds `rat + surd * sqrt(disc)`; `disc` must be 0 or squarefree.
    pub fn new(rat: Rational, surd: Rational, disc: u64) -> Result<Self> {
        if disc > 1 && !is_squarefree(disc) {
            return Err(Error::NotSquarefree(disc));
        }
        Ok(Self::normalized(rat, surd, disc))
    }

    fn normalized(rat: Rational, surd: Rational, disc: u64) -> Self {
        match disc {
            0 => Self::rational(rat),
            1 => Self::rational(rat + surd),
            _ if surd.is_zero() => Self::rational(rat),
            _ => QuadVal { rat, surd, disc },
        }
    }

    pub fn rational(q: Rational) -> Self {
        QuadVal {
            rat: q,
            surd: Rational::zero(),
            disc: 1,
        }
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    /// The non-negative square root of a non-negative rational, as an
    /// element of Q(sqrt(s)) with `s` the squarefree kernel of `q`.
    pub fn sqrt_of(q: &Rational) -> Result<Self> {
        if q.is_negative() {
            return Err(Error::InvalidInput(format!("square root of negative {q}")));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        // sqrt(n/d) = sqrt(n*d)/d = f*sqrt(s)/d
        let nd: BigUint = (q.numer() * q.denom()).to_biguint().expect("positive");
        let (s, f) = squarefree_part_big(&nd);
        let coeff = Rational::new(BigInt::from(f), q.denom().clone())?;
        let s = u64::try_from(&s)
            .map_err(|_| Error::InvalidInput(format!("discriminant of sqrt({q}) exceeds u64")))?;
        Ok(Self::normalized(Rational::zero(), coeff, s))
    }

    pub fn rat_part(&self) -> &Rational {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rational {
        &self.surd
    }

    pub fn disc(&self) -> u64 {
        self.disc
    }

    pub fn is_rational(&self) -> bool {
        self.surd.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        self.is_rational().then_some(&self.rat)
    }

    /// True when this value lives in Q(sqrt(d)).
    pub fn fits_disc(&self, d: u64) -> bool {
        self.is_rational() || self.disc == d
    }

    fn common_disc(&self, other: &QuadVal) -> Result<u64> {
        if self.is_rational() {
            Ok(other.disc)
        } else if other.is_rational() || self.disc == other.disc {
            Ok(self.disc)
        } else {
            Err(Error::MixedDiscriminant(self.disc, other.disc))
        }
    }

    pub fn try_add(&self, rhs: &QuadVal) -> Result<QuadVal> {
        let d = self.common_disc(rhs)?;
        Ok(Self::normalized(
            &self.rat + &rhs.rat,
            &self.surd + &rhs.surd,
            d,
        ))
    }

    pub fn try_sub(&self, rhs: &QuadVal) -> Result<QuadVal> {
        let d = self.common_disc(rhs)?;
        Ok(Self::normalized(
            &self.rat - &rhs.rat,
            &self.surd - &rhs.surd,
            d,
        ))
    }

    pub fn try_mul(&self, rhs: &QuadVal) -> Result<QuadVal> {
        let d = self.common_disc(rhs)?;
        let dq = Rational::from(d as i64);
        let rat = &self.rat * &rhs.rat + &self.surd * &rhs.surd * &dq;
        let surd = &self.rat * &rhs.surd + &self.surd * &rhs.rat;
        Ok(Self::normalized(rat, surd, d))
    }

    /// Galois conjugate `rat - surd * sqrt(disc)`.
    pub fn conj(&self) -> QuadVal {
        QuadVal {
            rat: self.rat.clone(),
            surd: -&self.surd,
            disc: self.disc,
        }
    }

    /// Field norm `rat^2 - surd^2 * disc`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        self.rat.square() - self.surd.square() * Rational::from(self.disc as i64)
    }

    pub fn recip(&self) -> Result<QuadVal> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let c = self.conj();
        Ok(Self::normalized(
            c.rat.checked_div(&n)?,
            c.surd.checked_div(&n)?,
            self.disc,
        ))
    }

    pub fn checked_div(&self, rhs: &QuadVal) -> Result<QuadVal> {
        self.common_disc(rhs)?;
        self.try_mul(&rhs.recip()?)
    }

    pub fn scale(&self, k: &Rational) -> QuadVal {
        Self::normalized(&self.rat * k, &self.surd * k, self.disc)
    }

    pub fn square(&self) -> QuadVal {
        self.try_mul(self).expect("same discriminant")
    }

    /// Exact sign of the real number `rat + surd * sqrt(disc)`.
    pub fn sign(&self) -> i32 {
        quad_sign(self)
    }

    pub fn cmp_exact(&self, other: &QuadVal) -> Result<Ordering> {
        Ok(self.try_sub(other)?.sign().cmp(&0))
    }

    pub fn abs(&self) -> QuadVal {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64() + self.surd.to_f64() * (self.disc as f64).sqrt()
    }
}

/// Sign of `a + b*sqrt(D)` without floating point.
///
/// Equal signs decide directly; otherwise the sign follows whichever of
/// `a^2` and `b^2 * D` is larger.
pub fn quad_sign(v: &QuadVal) -> i32 {
    let sa = v.rat.signum();
    let sb = v.surd.signum();
    if sb == 0 || v.disc == 0 {
        return sa;
    }
    if sa == 0 || sa == sb {
        return sb;
    }
    let a2 = v.rat.square();
    let b2d = v.surd.square() * Rational::from(v.disc as i64);
    match a2.cmp(&b2d) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => 0,
    }
}

impl From<Rational> for QuadVal {
    fn from(q: Rational) -> Self {
        QuadVal::rational(q)
    }
}

impl From<i64> for QuadVal {
    fn from(n: i64) -> Self {
        QuadVal::rational(Rational::from(n))
    }
}

impl fmt::Display for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            write!(f, "{}", self.rat)
        } else if self.rat.is_zero() {
            write!(f, "({})*sqrt({})", self.surd, self.disc)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.rat, self.surd, self.disc)
        }
    }
}

impl fmt::Debug for QuadVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mixed discriminants; the `try_*` methods report it.
macro_rules! quad_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadVal> for &QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: &QuadVal) -> QuadVal {
                self.$checked(rhs).expect("mixed discriminants")
            }
        }
        impl $trait<QuadVal> for QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: QuadVal) -> QuadVal {
                self.$checked(&rhs).expect("mixed discriminants")
            }
        }
        impl $trait<&QuadVal> for QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: &QuadVal) -> QuadVal {
                self.$checked(rhs).expect("mixed discriminants")
            }
        }
        impl $trait<QuadVal> for &QuadVal {
            type Output = QuadVal;
            fn $method(self, rhs: QuadVal) -> QuadVal {
                self.$checked(&rhs).expect("mixed discriminants")
            }
        }
    };
}

quad_binop!(Add, add, try_add);
quad_binop!(Sub, sub, try_sub);
quad_binop!(Mul, mul, try_mul);

impl Neg for QuadVal {
    type Output = QuadVal;
    fn neg(self) -> QuadVal {
        QuadVal::normalized(-self.rat, -self.surd, self.disc)
    }
}

impl Neg for &QuadVal {
    type Output = QuadVal;
    fn neg(self) -> QuadVal {
        QuadVal::normalized(-&self.rat, -&self.surd, self.disc)
    }
}
