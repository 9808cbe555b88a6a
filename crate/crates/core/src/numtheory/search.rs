use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use rayon::prelude::*;

use super::curve::{ECPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::kernel::{isqrt_exact, Rational};

/// Largest height accepted by [`rational_point_search`].
pub const MAX_SEARCH_HEIGHT: u64 = 1_000_000;

/// All affine rational points with `x = u/v` in lowest terms and
/// `|u|, v <= height`.
///
/// This is evidence only: an empty result beyond torsion does not prove the
/// curve has rank zero. Output order is by `v`, then `u`, then `y` ascending.
pub fn rational_point_search(c: &EllipticCurve, height: u64) -> Result<Vec<ECPoint>> {
    if height == 0 || height > MAX_SEARCH_HEIGHT {
        return Err(Error::OutOfRange(format!(
            "search height {height} must lie in 1..={MAX_SEARCH_HEIGHT}"
        )));
    }
    let h = height as i64;
    let per_denominator: Vec<Vec<ECPoint>> = (1..=h)
        .into_par_iter()
        .map(|v| {
            let mut found = Vec::new();
            for u in -h..=h {
                if u.gcd(&v) != 1 {
                    continue;
                }
                if let Some(y) = y_for(c, u, v) {
                    let x = Rational::new(u, v).expect("v >= 1");
                    if y.is_zero() {
                        found.push(ECPoint::Affine { x, y });
                    } else {
                        found.push(ECPoint::Affine {
                            x: x.clone(),
                            y: -&y,
                        });
                        found.push(ECPoint::Affine { x, y });
                    }
                }
            }
            found
        })
        .collect();
    Ok(per_denominator.into_iter().flatten().collect())
}

/// Non-negative `y` with `y^2 = f(u/v)`, if rational.
///
/// `f(u/v) = num / v^3` with `num = u^3 + a2 u^2 v + a1 u v^2 + a0 v^3`, which is
/// a rational square exactly when `num * v` is an integer square.
fn y_for(c: &EllipticCurve, u: i64, v: i64) -> Option<Rational> {
    match y_for_i128(c, u, v) {
        Some(result) => result,
        None => y_for_big(c, u, v),
    }
}

/// `None` on overflow; `Some(None)` when not a square.
#[allow(clippy::option_option)]
fn y_for_i128(c: &EllipticCurve, u: i64, v: i64) -> Option<Option<Rational>> {
    let (u, v) = (u as i128, v as i128);
    let u2 = u.checked_mul(u)?;
    let v2 = v.checked_mul(v)?;
    let num = u2
        .checked_mul(u)?
        .checked_add((c.a2 as i128).checked_mul(u2)?.checked_mul(v)?)?
        .checked_add((c.a1 as i128).checked_mul(u)?.checked_mul(v2)?)?
        .checked_add((c.a0 as i128).checked_mul(v2)?.checked_mul(v)?)?;
    let nv = num.checked_mul(v)?;
    if nv < 0 {
        return Some(None);
    }
    let nv = nv as u128;
    let r = nv.sqrt();
    if r * r != nv {
        return Some(None);
    }
    Some(Some(Rational::new(BigInt::from(r), BigInt::from(v2)).ok()?))
}

fn y_for_big(c: &EllipticCurve, u: i64, v: i64) -> Option<Rational> {
    let (u, v) = (BigInt::from(u), BigInt::from(v));
    let num = &u * &u * &u
        + BigInt::from(c.a2) * &u * &u * &v
        + BigInt::from(c.a1) * &u * &v * &v
        + BigInt::from(c.a0) * &v * &v * &v;
    let r = isqrt_exact(&(num * &v))?;
    Rational::new(r, &v * &v).ok()
}
