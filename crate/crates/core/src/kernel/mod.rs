//! Exact arithmetic: big rationals and real quadratic fields.

mod arith;
mod quad;
mod rational;
mod side;

pub use arith::{is_squarefree, isqrt_exact, rat_is_square, squarefree_part, squarefree_part_big};
pub use quad::{quad_sign, QuadVal};
pub use rational::Rational;
pub use side::SideLength;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Squared area of the triangle with sides `a`, `b`, `c` (Heron), with the
/// squarefree `D` such that the area lies in `Q * sqrt(D)`.
pub fn heron_area_sq(a: &Rational, b: &Rational, c: &Rational) -> Result<(Rational, u64)> {
    if !(a.is_positive() && b.is_positive() && c.is_positive()) {
        return Err(Error::DegenerateTriangle(format!(
            "sides must be positive: {a}, {b}, {c}"
        )));
    }
    let factors = [a + b + c, -a + b + c, a - b + c, a + b - c];
    if factors.iter().any(|f| !f.is_positive()) {
        return Err(Error::DegenerateTriangle(format!(
            "triangle inequality fails for {a}, {b}, {c}"
        )));
    }
    let area_sq = factors.into_iter().fold(Rational::one(), |acc, f| acc * f) / Rational::from(16);
    let nd: BigUint = (area_sq.numer() * area_sq.denom())
        .to_biguint()
        .expect("positive product");
    let (s, _) = squarefree_part_big(&nd);
    let d = u64::try_from(&s)
        .map_err(|_| Error::InvalidInput("area discriminant exceeds u64".into()))?;
    Ok((area_sq, d))
}
