//! Expressions that are provably never rational squares, and the coprime
//! Eisenstein-triple check.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{isqrt_exact, Rational};

/// `Some(sqrt(n))` when `n` is a perfect square.
pub fn is_perfect_square(n: impl Into<BigInt>) -> Option<BigInt> {
    isqrt_exact(&n.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EisensteinSquareReport {
    pub a: u64,
    pub b: u64,
    /// `a^2 + ab + b^2`
    pub eisenstein_norm: BigInt,
    pub eisenstein_root: Option<BigInt>,
    /// `a(a + b)`
    pub a_times_a_plus_b: BigInt,
    pub a_times_a_plus_b_root: Option<BigInt>,
    /// Never true for coprime positive input.
    pub both_square: bool,
}

/// For coprime positive `a`, `b`: reports whether `a^2 + ab + b^2` and
/// `a(a+b)` are squares. They are never both squares.
pub fn check_eisenstein_pair(a: u64, b: u64) -> Result<EisensteinSquareReport> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange(format!("({a}, {b}) must be positive")));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime(a.to_string(), b.to_string()));
    }
    let (ab, bb) = (BigInt::from(a), BigInt::from(b));
    let norm = &ab * &ab + &ab * &bb + &bb * &bb;
    let prod = &ab * (&ab + &bb);
    let norm_root = isqrt_exact(&norm);
    let prod_root = isqrt_exact(&prod);
    Ok(EisensteinSquareReport {
        a,
        b,
        both_square: norm_root.is_some() && prod_root.is_some(),
        eisenstein_norm: norm,
        eisenstein_root: norm_root,
        a_times_a_plus_b: prod,
        a_times_a_plus_b_root: prod_root,
    })
}

/// `(t^2 - 2)(t^2 - 3)`.
pub fn eval_nonsquare_sin_half(t: &Rational) -> Rational {
    let t2 = t.square();
    (&t2 - Rational::from(2)) * (t2 - Rational::from(3))
}

fn check_poles(t: &Rational) -> Result<()> {
    if *t == Rational::one() || *t == Rational::frac(-1, 3) {
        return Err(Error::Pole(t.to_string()));
    }
    Ok(())
}

/// `(2/3) (3t^2 - 1) / ((3t + 1)(t - 1))`, poles at `t = 1` and `t = -1/3`.
pub fn eval_nonsquare_double_angle(t: &Rational) -> Result<Rational> {
    check_poles(t)?;
    let num = Rational::from(3) * t.square() - Rational::one();
    let den = (Rational::from(3) * t + Rational::one()) * (t - Rational::one());
    Ok(Rational::frac(2, 3) * num / den)
}

/// Sign of the constant term in the numerator of the two-plus-half expression.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstantSign {
    /// `3t^2 - 6t - 1`: agrees with `(x^2 + 6x - 3)/(4x)` under `t = (x-1)/(x+3)`.
    Minus,
    /// `3t^2 - 6t + 1`: kept for comparison; it is a square at `t = 1/5`.
    Plus,
}

/// `(3t^2 - 6t - 1) / ((t - 1)(3t + 1))`, poles at `t = 1` and `t = -1/3`.
pub fn eval_nonsquare_two_plus_half(t: &Rational) -> Result<Rational> {
    eval_nonsquare_two_plus_half_variant(t, ConstantSign::Minus)
}

pub fn eval_nonsquare_two_plus_half_variant(t: &Rational, sign: ConstantSign) -> Result<Rational> {
    check_poles(t)?;
    let constant = match sign {
        ConstantSign::Minus => Rational::from(-1),
        ConstantSign::Plus => Rational::one(),
    };
    let num = Rational::from(3) * t.square() - Rational::from(6) * t + constant;
    let den = (t - Rational::one()) * (Rational::from(3) * t + Rational::one());
    Ok(num / den)
}
