use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::curve::{ECPoint, EllipticCurve};
use crate::error::Result;
use crate::kernel::Rational;

/// Mazur: a rational torsion point has order at most 12.
pub const MAX_TORSION_ORDER: u32 = 12;

/// Isomorphism type of a finite abelian torsion group of an elliptic curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupStructure {
    /// `Z/n`.
    Cyclic(u32),
    /// `Z/2 x Z/n` with `n` even.
    TwoTimes(u32),
}

impl GroupStructure {
    pub fn order(&self) -> u32 {
        match self {
            GroupStructure::Cyclic(n) => *n,
            GroupStructure::TwoTimes(n) => 2 * n,
        }
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Cyclic(n) => write!(f, "Z/{n}"),
            GroupStructure::TwoTimes(n) => write!(f, "Z/2 x Z/{n}"),
        }
    }
}

impl Serialize for GroupStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionPoint {
    pub point: ECPoint,
    pub order: u32,
}

/// The rational torsion subgroup, points sorted with infinity first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorsionGroup {
    pub curve: EllipticCurve,
    pub points: Vec<TorsionPoint>,
    pub structure: GroupStructure,
}

impl TorsionGroup {
    pub fn point_list(&self) -> Vec<ECPoint> {
        self.points.iter().map(|p| p.point.clone()).collect()
    }

    pub fn affine_points(&self) -> impl Iterator<Item = &ECPoint> {
        self.points
            .iter()
            .map(|p| &p.point)
            .filter(|p| !p.is_infinity())
    }

    /// Points whose order equals the group order (empty unless cyclic).
    pub fn generators(&self) -> Vec<ECPoint> {
        let n = self.structure.order();
        self.points
            .iter()
            .filter(|p| p.order == n)
            .map(|p| p.point.clone())
            .collect()
    }
}

/// Enumerates the rational torsion subgroup.
///
/// Nagell–Lutz restricts affine torsion points to integral `(x, y)` with
/// `y = 0` or `y^2 | disc`; each candidate is kept when repeated addition
/// reaches infinity within [`MAX_TORSION_ORDER`] steps.
pub fn torsion_points(c: &EllipticCurve) -> Result<TorsionGroup> {
    let c = EllipticCurve::new(c.a2, c.a1, c.a0)?;
    let disc = c.discriminant().abs();

    let mut ys = vec![BigInt::zero()];
    let mut y = BigInt::one();
    while &y * &y <= disc {
        if (&disc % (&y * &y)).is_zero() {
            ys.push(y.clone());
        }
        y += 1;
    }

    let mut candidates = Vec::new();
    for y in &ys {
        let c0 = BigInt::from(c.a0) - y * y;
        for x in integer_roots_monic_cubic(&BigInt::from(c.a2), &BigInt::from(c.a1), &c0) {
            let xr = Rational::from(x);
            let yr = Rational::from(y.clone());
            if !y.is_zero() {
                candidates.push(ECPoint::Affine {
                    x: xr.clone(),
                    y: -&yr,
                });
            }
            candidates.push(ECPoint::Affine { x: xr, y: yr });
        }
    }

    let mut points = vec![TorsionPoint {
        point: ECPoint::Infinity,
        order: 1,
    }];
    for p in candidates {
        if let Some(order) = c.order(&p, MAX_TORSION_ORDER)? {
            points.push(TorsionPoint { point: p, order });
        }
    }
    points.sort_by(|a, b| a.point.cmp(&b.point));
    points.dedup_by(|a, b| a.point == b.point);

    let n = points.len() as u32;
    let two_torsion = points.iter().filter(|p| p.order == 2).count();
    let structure = if two_torsion == 3 {
        GroupStructure::TwoTimes(n / 2)
    } else {
        GroupStructure::Cyclic(n)
    };
    Ok(TorsionGroup {
        curve: c,
        points,
        structure,
    })
}

/// Integer roots of `x^3 + c2 x^2 + c1 x + c0`, ascending.
fn integer_roots_monic_cubic(c2: &BigInt, c1: &BigInt, c0: &BigInt) -> Vec<BigInt> {
    let eval = |x: &BigInt| ((x + c2) * x + c1) * x + c0;
    let mut roots = Vec::new();
    // Strip factors of x, then every further integer root divides the lowest
    // non-zero coefficient.
    let low = if !c0.is_zero() {
        c0.clone()
    } else {
        roots.push(BigInt::zero());
        if !c1.is_zero() {
            c1.clone()
        } else if !c2.is_zero() {
            c2.clone()
        } else {
            return roots;
        }
    };
    for d in divisors(&low.abs()) {
        for x in [d.clone(), -d] {
            if eval(&x).is_zero() {
                roots.push(x);
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let r = n.sqrt();
    let mut d = BigInt::one();
    while d <= r {
        if (n % &d).is_zero() {
            out.push(d.clone());
            out.push(n / &d);
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_roots() {
        let r = |a: i64, b: i64, c: i64| {
            integer_roots_monic_cubic(&a.into(), &b.into(), &c.into())
                .into_iter()
                .map(|x| i64::try_from(x).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(r(2, -3, 0), vec![-3, 0, 1]);
        assert_eq!(r(0, 0, 0), vec![0]);
        assert_eq!(r(-6, 11, -6), vec![1, 2, 3]);
        assert_eq!(r(0, 0, -2), Vec::<i64>::new());
        assert_eq!(r(1, 0, 0), vec![-1, 0]);
    }

    #[test]
    fn structure_display() {
        assert_eq!(GroupStructure::Cyclic(6).to_string(), "Z/6");
        assert_eq!(GroupStructure::TwoTimes(4).to_string(), "Z/2 x Z/4");
    }

    #[test]
    fn curve_with_point_of_infinite_order() {
        // y^2 = x^3 - 2 has (3, 5) of infinite order and trivial torsion.
        let c = EllipticCurve::new(0, 0, -2).unwrap();
        let g = torsion_points(&c).unwrap();
        assert_eq!(g.point_list(), vec![ECPoint::Infinity]);
        assert_eq!(g.structure, GroupStructure::Cyclic(1));
    }

    #[test]
    fn cyclic_order_six_curve() {
        // y^2 = x^3 + 1: (-1,0), (0,+-1), (2,+-3) and infinity.
        let c = EllipticCurve::new(0, 0, 1).unwrap();
        let g = torsion_points(&c).unwrap();
        assert_eq!(g.structure, GroupStructure::Cyclic(6));
        assert_eq!(g.points.len(), 6);
    }
}
