//! Exact angle data and the half/quarter-angle rationality tests.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{heron_area_sq, rat_is_square, Rational};

/// Cosines of the angles `(A, B, C)` opposite sides `(a, b, c)`, and the
/// pairwise sine products, all rational for rational side lengths.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AngleData {
    pub cos_a: Rational,
    pub cos_b: Rational,
    pub cos_c: Rational,
    pub sinprod_ab: Rational,
    pub sinprod_ac: Rational,
    pub sinprod_bc: Rational,
}

impl AngleData {
    pub fn cos(&self, i: usize) -> &Rational {
        match i {
            0 => &self.cos_a,
            1 => &self.cos_b,
            2 => &self.cos_c,
            _ => panic!("angle index {i} out of range"),
        }
    }

    /// `sin(X_i) * sin(X_j)` for `i != j`.
    pub fn sinprod(&self, i: usize, j: usize) -> &Rational {
        match (i.min(j), i.max(j)) {
            (0, 1) => &self.sinprod_ab,
            (0, 2) => &self.sinprod_ac,
            (1, 2) => &self.sinprod_bc,
            _ => panic!("sine product ({i}, {j}) out of range"),
        }
    }

    /// Niven: a rational cosine of a rational multiple of pi is one of
    /// 0, +-1/2, +-1. All three angles are such multiples exactly when
    /// every cosine is in that set.
    pub fn has_commensurable_angles(&self) -> bool {
        let niven = [
            Rational::zero(),
            Rational::frac(1, 2),
            Rational::frac(-1, 2),
        ];
        (0..3).all(|i| niven.contains(self.cos(i)))
    }
}

/// Law of cosines, plus `sin X sin Y = 4 K^2 / (x y z^2)` with `K` the area
/// and `z` the third side.
pub fn angle_data_from_sides(a: &Rational, b: &Rational, c: &Rational) -> Result<AngleData> {
    let (area_sq, _) = heron_area_sq(a, b, c)?;
    let two = Rational::from(2);
    let cos = |x: &Rational, y: &Rational, z: &Rational| {
        (y.square() + z.square() - x.square()) / (&two * y * z)
    };
    let four_k2 = Rational::from(4) * &area_sq;
    let sinprod = |x: &Rational, y: &Rational, z: &Rational| &four_k2 / (x * y * z.square());
    Ok(AngleData {
        cos_a: cos(a, b, c),
        cos_b: cos(b, a, c),
        cos_c: cos(c, a, b),
        sinprod_ab: sinprod(a, b, c),
        sinprod_ac: sinprod(a, c, b),
        sinprod_bc: sinprod(b, c, a),
    })
}

fn check_open_cos(cos: &Rational) -> Result<()> {
    if *cos <= Rational::from(-1) || *cos >= Rational::one() {
        return Err(Error::OutOfRange(format!("cosine {cos} outside (-1, 1)")));
    }
    Ok(())
}

/// `sqrt(3) tan(X/2)` when rational, as `(q, t)` with `t = q/3`.
///
/// Uses `q^2 = 3 (1 - cos X) / (1 + cos X)`.
pub fn test_sqrt3_tan_half(cos: &Rational) -> Result<Option<(Rational, Rational)>> {
    check_open_cos(cos)?;
    let q2 = Rational::from(3) * (Rational::one() - cos) / (Rational::one() + cos);
    Ok(rat_is_square(&q2).map(|q| {
        let t = &q / &Rational::from(3);
        (q, t)
    }))
}

/// `sin(X/2)` when rational, from `sin^2(X/2) = (1 - cos X)/2`.
pub fn test_sin_half(cos: &Rational) -> Result<Option<Rational>> {
    check_open_cos(cos)?;
    Ok(rat_is_square(
        &((Rational::one() - cos) / Rational::from(2)),
    ))
}

/// `2 sin(X/4) = M/K` in lowest terms, when both `cos(X/2)` and `sin(X/4)`
/// are rational.
pub fn test_two_sin_quarter(cos: &Rational) -> Result<Option<(Rational, Rational)>> {
    check_open_cos(cos)?;
    let Some(cos_half) = rat_is_square(&((Rational::one() + cos) / Rational::from(2))) else {
        return Ok(None);
    };
    let Some(sin_quarter) = rat_is_square(&((Rational::one() - cos_half) / Rational::from(2)))
    else {
        return Ok(None);
    };
    let s = Rational::from(2) * sin_quarter;
    Ok(Some((
        Rational::from(s.numer().clone()),
        Rational::from(s.denom().clone()),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    #[test]
    fn angle_data_examples() {
        let d = angle_data_from_sides(&r(3, 1), &r(4, 1), &r(5, 1)).unwrap();
        assert_eq!(
            (d.cos_a.clone(), d.cos_b.clone(), d.cos_c.clone()),
            (r(4, 5), r(3, 5), r(0, 1))
        );
        // sin A sin B = (3/5)(4/5)
        assert_eq!(d.sinprod_ab, r(12, 25));
        assert_eq!(d.sinprod_ac, r(3, 5));
        let d = angle_data_from_sides(&r(1, 1), &r(1, 1), &r(1, 1)).unwrap();
        assert!((0..3).all(|i| *d.cos(i) == r(1, 2)));
        assert_eq!(d.sinprod_bc, r(3, 4));
        assert!(d.has_commensurable_angles());
        let d = angle_data_from_sides(&r(2, 1), &r(3, 1), &r(4, 1)).unwrap();
        assert_eq!(d.cos_a, r(7, 8));
        assert!(!d.has_commensurable_angles());
    }

    #[test]
    fn sqrt3_tan_half_examples() {
        assert_eq!(
            test_sqrt3_tan_half(&r(11, 14)).unwrap(),
            Some((r(3, 5), r(1, 5)))
        );
        assert_eq!(
            test_sqrt3_tan_half(&r(1, 2)).unwrap(),
            Some((r(1, 1), r(1, 3)))
        );
        assert_eq!(test_sqrt3_tan_half(&r(4, 5)).unwrap(), None);
        assert!(test_sqrt3_tan_half(&r(1, 1)).is_err());
    }

    #[test]
    fn sin_half_examples() {
        assert_eq!(test_sin_half(&r(7, 8)).unwrap(), Some(r(1, 4)));
        assert_eq!(test_sin_half(&r(1, 2)).unwrap(), Some(r(1, 2)));
        assert_eq!(test_sin_half(&r(3, 5)).unwrap(), None);
    }

    #[test]
    fn two_sin_quarter_examples() {
        // cos(X/2) = 7/8, sin^2(X/4) = 1/16
        assert_eq!(
            test_two_sin_quarter(&r(17, 32)).unwrap(),
            Some((r(1, 1), r(2, 1)))
        );
        assert_eq!(test_two_sin_quarter(&r(1, 2)).unwrap(), None);
        // cos(X/2) rational but sin(X/4) not: cos(X/2) = 3/5
        assert_eq!(test_two_sin_quarter(&r(-7, 25)).unwrap(), None);
    }
}
