use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::Rational;

/// Integer that serializes as a JSON number when it fits in `i64`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<BigInt> for Int {
    fn from(n: BigInt) -> Self {
        Int(n)
    }
}

impl From<i64> for Int {
    fn from(n: i64) -> Self {
        Int(n.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TileKind {
    /// Angles `(alpha, beta, gamma)` with `3 alpha + 2 beta = pi`.
    Group1,
    /// Angles `(alpha, beta, 2 pi / 3)`.
    Group2,
    Right,
    Commensurate,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TileShape {
    pub kind: TileKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sides: Option<[Int; 3]>,
    pub angle_relation: &'static str,
}

impl TileShape {
    pub fn group1(sides: [Rational; 3]) -> Self {
        TileShape {
            kind: TileKind::Group1,
            sides: Some(primitive_triple(&sides)),
            angle_relation: "3*alpha + 2*beta = pi",
        }
    }

    pub fn group2(sides: [Rational; 3]) -> Self {
        TileShape {
            kind: TileKind::Group2,
            sides: Some(primitive_triple(&sides)),
            angle_relation: "gamma = 2*pi/3",
        }
    }

    pub fn right(sides: Option<[Int; 3]>) -> Self {
        TileShape {
            kind: TileKind::Right,
            sides,
            angle_relation: "right",
        }
    }

    pub fn commensurate(angle_relation: &'static str) -> Self {
        TileShape {
            kind: TileKind::Commensurate,
            sides: None,
            angle_relation,
        }
    }
}

/// Smallest positive integer triple proportional to `v`.
pub fn primitive_triple(v: &[Rational; 3]) -> [Int; 3] {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    [Int(&ints[0] / &g), Int(&ints[1] / &g), Int(&ints[2] / &g)]
}

/// GROUP1 tile side ratios `(s, 1 - s^2, 1)`.
pub fn group1_sides(s: &Rational) -> [Rational; 3] {
    [s.clone(), Rational::one() - s.square(), Rational::one()]
}

/// GROUP2 tile side ratios `(4t, 1 - 2t - 3t^2, 1 + 3t^2)`; the last side is
/// opposite the `2 pi / 3` angle.
pub fn group2_sides(t: &Rational) -> [Rational; 3] {
    let t2 = Rational::from(3) * t.square();
    [
        Rational::from(4) * t,
        Rational::one() - Rational::from(2) * t - &t2,
        Rational::one() + t2,
    ]
}

/// Tile shape for conditions 4 through 8.
///
/// `param` is `t` for conditions 4, 5 and 8, `s = 2 sin(A/2)` for 6 and
/// `M/K` for 7.
pub fn tile_shape_for(condition: u8, param: &Rational) -> Result<TileShape> {
    match condition {
        4 | 5 | 8 => {
            if !(param.is_positive() && *param < Rational::frac(1, 3)) {
                return Err(Error::OutOfRange(format!(
                    "t = {param} is outside (0, 1/3)"
                )));
            }
            Ok(TileShape::group2(group2_sides(param)))
        }
        6 | 7 => {
            if !(param.is_positive() && *param < Rational::one()) {
                return Err(Error::OutOfRange(format!("s = {param} is outside (0, 1)")));
            }
            Ok(TileShape::group1(group1_sides(param)))
        }
        _ => Err(Error::InvalidInput(format!(
            "tile shapes are derived for conditions 4 to 8, got {condition}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: [i64; 3]) -> Option<[Int; 3]> {
        Some(v.map(Int::from))
    }

    #[test]
    fn group1_examples() {
        let t = tile_shape_for(7, &Rational::frac(2, 4)).unwrap();
        assert_eq!(t.kind, TileKind::Group1);
        assert_eq!(t.sides, ints([2, 3, 4]));
        let t = tile_shape_for(7, &Rational::frac(5, 25)).unwrap();
        assert_eq!(t.sides, ints([5, 24, 25]));
    }

    #[test]
    fn group2_example() {
        let t = tile_shape_for(4, &Rational::frac(1, 5)).unwrap();
        assert_eq!(t.kind, TileKind::Group2);
        assert_eq!(t.sides, ints([5, 3, 7]));
    }

    #[test]
    fn bad_condition() {
        assert!(tile_shape_for(3, &Rational::frac(1, 5)).is_err());
        assert!(tile_shape_for(9, &Rational::frac(1, 5)).is_err());
        assert!(tile_shape_for(5, &Rational::frac(1, 3)).is_err());
    }

    #[test]
    fn json_sides_are_numbers() {
        let t = tile_shape_for(4, &Rational::frac(1, 5)).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(
            s,
            r#"{"kind":"GROUP2","sides":[5,3,7],"angle_relation":"gamma = 2*pi/3"}"#
        );
    }
}
