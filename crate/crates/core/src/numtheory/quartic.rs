use serde::Serialize;

use super::curve::{ECPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::kernel::Rational;

/// The quartic `s^2 = t^4 + a*t^2 + b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuarticCurve {
    pub a: i64,
    pub b: i64,
}

impl QuarticCurve {
    pub fn new(a: i64, b: i64) -> Self {
        QuarticCurve { a, b }
    }

    pub fn contains(&self, t: &Rational, s: &Rational) -> bool {
        let t2 = t.square();
        s.square() == &t2 * &t2 + Rational::from(self.a) * &t2 + Rational::from(self.b)
    }
}

/// The cubic model `y^2 = x^3 - 2a x^2 + (a^2 - 4b) x` attached to the quartic.
pub fn quartic_to_weierstrass(q: &QuarticCurve) -> Result<EllipticCurve> {
    let a2 =
        q.a.checked_mul(-2)
            .ok_or_else(|| Error::OutOfRange(format!("quartic coefficient a = {}", q.a)))?;
    let a1 =
        q.a.checked_mul(q.a)
            .and_then(|a_sq| q.b.checked_mul(4).and_then(|b4| a_sq.checked_sub(b4)))
            .ok_or_else(|| Error::OutOfRange(format!("quartic coefficients {q:?}")))?;
    EllipticCurve::new(a2, a1, 0)
}

/// `(t, s) -> (x, y) = (2t^2 - 2s + a, 2t (2t^2 - 2s + a))`.
pub fn quartic_point_map(q: &QuarticCurve, t: &Rational, s: &Rational) -> Result<ECPoint> {
    if !q.contains(t, s) {
        return Err(Error::NotOnCurve(format!(
            "(t, s) = ({t}, {s}) on s^2 = t^4 + {} t^2 + {}",
            q.a, q.b
        )));
    }
    let x = Rational::from(2) * t.square() - Rational::from(2) * s + Rational::from(q.a);
    let y = Rational::from(2) * t * &x;
    Ok(ECPoint::Affine { x, y })
}

/// Inverse of [`quartic_point_map`] away from `x = 0`:
/// `t = y/(2x)`, `s = t^2 - (x - a)/2`. Returns `None` at `x = 0`.
pub fn quartic_point_unmap(q: &QuarticCurve, p: &ECPoint) -> Result<Option<(Rational, Rational)>> {
    let curve = quartic_to_weierstrass(q)?;
    let (x, y) = match p {
        ECPoint::Infinity => return Err(Error::PointAtInfinity),
        ECPoint::Affine { x, y } => (x, y),
    };
    if !curve.contains(p) {
        return Err(Error::NotOnCurve(format!("{p} on {curve}")));
    }
    if x.is_zero() {
        return Ok(None);
    }
    let t = y / &(Rational::from(2) * x);
    let s = t.square() - (x - Rational::from(q.a)) / Rational::from(2);
    Ok(Some((t, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weierstrass_models() {
        assert_eq!(
            quartic_to_weierstrass(&QuarticCurve::new(-1, 1)).unwrap(),
            EllipticCurve {
                a2: 2,
                a1: -3,
                a0: 0
            }
        );
        assert_eq!(
            quartic_to_weierstrass(&QuarticCurve::new(-5, 6)).unwrap(),
            EllipticCurve {
                a2: 10,
                a1: 1,
                a0: 0
            }
        );
        assert!(quartic_to_weierstrass(&QuarticCurve::new(0, 0)).is_err());
    }

    #[test]
    fn forward_map_examples() {
        let q = QuarticCurve::new(-1, 1);
        let r = Rational::from;
        assert_eq!(
            quartic_point_map(&q, &r(1), &r(1)).unwrap(),
            ECPoint::affine(-1, -2)
        );
        assert_eq!(
            quartic_point_map(&q, &r(0), &r(1)).unwrap(),
            ECPoint::affine(-3, 0)
        );
        assert_eq!(
            quartic_point_map(&q, &r(0), &r(-1)).unwrap(),
            ECPoint::affine(1, 0)
        );
        assert!(quartic_point_map(&q, &r(1), &r(2)).is_err());
    }

    #[test]
    fn inverse_map_examples() {
        let q = QuarticCurve::new(-1, 1);
        assert_eq!(
            quartic_point_unmap(&q, &ECPoint::affine(3, 6)).unwrap(),
            Some((Rational::from(1), Rational::from(-1)))
        );
        assert_eq!(
            quartic_point_unmap(&q, &ECPoint::affine(0, 0)).unwrap(),
            None
        );
        let q = QuarticCurve::new(-5, 6);
        assert!(quartic_point_unmap(&q, &ECPoint::affine(1, -4)).is_err());
        assert_eq!(
            quartic_point_unmap(&q, &ECPoint::Infinity),
            Err(Error::PointAtInfinity)
        );
    }
}
