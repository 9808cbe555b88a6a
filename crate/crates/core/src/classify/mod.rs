//! Decides which of the eight non-square tiling conditions a triangle meets.
//!
//! Conditions:
//! 1. isosceles;
//! 2. right with legs in integral ratio `M/K` and `M^2 + K^2` not a square;
//! 3. the `(pi/6, pi/2, pi/3)` triangle;
//! 4. `C = pi/3` and `sqrt(3) tan(A/2)` rational;
//! 5. `B = 2A` and `sqrt(3) tan(A/2)` rational;
//! 6. `B = 2A` and `sin(A/2)` rational;
//! 7. `C = A/2 + B`, `2 sin(A/4) = M/K` rational and `2K^2 - M^2` not a square;
//! 8. `C = 2A + B/2` and `sqrt(3) tan(A/2)` rational.

mod angles;
mod family;
mod relations;
mod tile;

pub use angles::{
    angle_data_from_sides, test_sin_half, test_sqrt3_tan_half, test_two_sin_quarter, AngleData,
};
pub use family::{cos_from_t, family_sides, half_sum_pair, FamilyTag};
pub use relations::{
    all_permutations, check_angle_relation, AngleRelation, Permutation, TriangleAngles,
};
pub use tile::{
    group1_sides, group2_sides, primitive_triple, tile_shape_for, Int, TileKind, TileShape,
};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kernel::{rat_is_square, Rational, SideLength};
use crate::numtheory::is_perfect_square;

/// An input triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangleSpec {
    /// Angles as multiples of pi.
    AnglesPi([Rational; 3]),
    /// Side lengths, each with a rational square.
    Sides([SideLength; 3]),
    Family {
        tag: FamilyTag,
        params: Vec<Rational>,
    },
}

impl TriangleSpec {
    pub fn angles_pi(a: Rational, b: Rational, c: Rational) -> Self {
        TriangleSpec::AnglesPi([a, b, c])
    }

    /// Rational side lengths.
    pub fn sides(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        Ok(TriangleSpec::Sides([
            SideLength::rational(a)?,
            SideLength::rational(b)?,
            SideLength::rational(c)?,
        ]))
    }

    pub fn family(tag: FamilyTag, params: Vec<Rational>) -> Self {
        TriangleSpec::Family { tag, params }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            TriangleSpec::AnglesPi(p) => {
                if p.iter().any(|x| !x.is_positive() || *x >= Rational::one()) {
                    return Err(Error::InvalidInput("each angle must lie in (0, pi)".into()));
                }
                if p.iter().sum::<Rational>() != Rational::one() {
                    return Err(Error::InvalidInput("angles must sum to pi".into()));
                }
                Ok(())
            }
            TriangleSpec::Sides(s) => {
                if area16_sq(s).is_positive() {
                    Ok(())
                } else {
                    Err(Error::DegenerateTriangle(format!(
                        "sides {}, {}, {} violate the strict triangle inequality",
                        s[0], s[1], s[2]
                    )))
                }
            }
            TriangleSpec::Family { tag, params } => family_sides(*tag, params).map(|_| ()),
        }
    }
}

/// `16 K^2` from squared sides.
fn area16_sq(s: &[SideLength; 3]) -> Rational {
    let [x, y, z] = [s[0].squared(), s[1].squared(), s[2].squared()];
    let two = Rational::from(2);
    &two * &(x * y + y * z + z * x) - (x.square() + y.square() + z.square())
}

/// Evidence for a satisfied condition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    /// Indices of the two equal angles.
    Isosceles {
        equal: [usize; 2],
    },
    Right {
        m: Int,
        k: Int,
        sum_of_squares: Int,
    },
    /// Indices of the angles `(pi/6, pi/2, pi/3)`.
    ThirtySixtyNinety {
        perm: Permutation,
    },
    TanHalf {
        perm: Permutation,
        q: Rational,
        t: Rational,
    },
    SinHalf {
        perm: Permutation,
        sin_half: Rational,
        s: Rational,
    },
    TwoSinQuarter {
        perm: Permutation,
        m: Int,
        k: Int,
        n: Int,
        #[serde(skip_serializing_if = "Option::is_none")]
        reduced: Option<[Int; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub id: u8,
    pub witness: Witness,
    pub tile_shape: TileShape,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub input: TriangleSpec,
    pub conditions: Vec<ConditionReport>,
    pub admits_nonsquare: bool,
    pub diagnostics: Vec<String>,
}

impl Verdict {
    pub fn condition_ids(&self) -> Vec<u8> {
        self.conditions.iter().map(|c| c.id).collect()
    }

    pub fn get(&self, id: u8) -> Option<&ConditionReport> {
        self.conditions.iter().find(|c| c.id == id)
    }

    fn push(&mut self, id: u8, witness: Witness, tile_shape: TileShape) {
        self.conditions.push(ConditionReport {
            id,
            witness,
            tile_shape,
        });
    }

    fn note(&mut self, msg: impl Into<String>) {
        self.diagnostics.push(msg.into());
    }
}

const COMMENSURABLE_NOTE: &str =
    "all angles are rational multiples of pi; conditions 4 to 8 do not apply";

/// Runs every applicable condition test on `spec`.
pub fn classify(spec: &TriangleSpec) -> Result<Verdict> {
    spec.validate()?;
    let mut v = Verdict {
        input: spec.clone(),
        conditions: Vec::new(),
        admits_nonsquare: false,
        diagnostics: Vec::new(),
    };
    match spec {
        TriangleSpec::AnglesPi(p) => classify_pi(p, &mut v),
        TriangleSpec::Sides(s) => classify_sides(s, &mut v)?,
        TriangleSpec::Family { tag, params } => classify_family(*tag, params, &mut v)?,
    }
    v.conditions.sort_by_key(|c| c.id);
    v.admits_nonsquare = !v.conditions.is_empty();
    Ok(v)
}

fn equal_pair<T: PartialEq>(x: &[T; 3]) -> Option<[usize; 2]> {
    [[0, 1], [0, 2], [1, 2]]
        .into_iter()
        .find(|&[i, j]| x[i] == x[j])
}

fn classify_pi(p: &[Rational; 3], v: &mut Verdict) {
    if let Some(equal) = equal_pair(p) {
        v.push(
            1,
            Witness::Isosceles { equal },
            TileShape::commensurate("isosceles"),
        );
    }
    let half = Rational::frac(1, 2);
    if let Some(c) = (0..3).find(|&i| p[i] == half) {
        // tan of a rational multiple of pi in (0, pi/2) is rational only at pi/4
        let quarter = Rational::frac(1, 4);
        if p.iter().enumerate().all(|(i, x)| i == c || *x == quarter) {
            let one = Int::from(1);
            v.push(
                2,
                Witness::Right {
                    m: one.clone(),
                    k: one,
                    sum_of_squares: Int::from(2),
                },
                TileShape::right(None),
            );
        } else {
            v.note("right angle with legs in irrational ratio");
        }
    }
    let find = |x: Rational| (0..3).find(|&i| p[i] == x);
    if let (Some(a), Some(b), Some(c)) = (
        find(Rational::frac(1, 6)),
        find(half),
        find(Rational::frac(1, 3)),
    ) {
        v.push(
            3,
            Witness::ThirtySixtyNinety { perm: [a, b, c] },
            TileShape::right(None),
        );
    }
    v.note(COMMENSURABLE_NOTE);
}

fn classify_sides(s: &[SideLength; 3], v: &mut Verdict) -> Result<()> {
    let sq = [s[0].squared(), s[1].squared(), s[2].squared()];
    if let Some(equal) = equal_pair(&sq) {
        v.push(
            1,
            Witness::Isosceles { equal },
            TileShape::commensurate("isosceles"),
        );
    }
    for c in 0..3 {
        let (a, b) = ((c + 1) % 3, (c + 2) % 3);
        if sq[a] + sq[b] != *sq[c] {
            continue;
        }
        let (lo, hi) = if sq[a] <= sq[b] {
            (sq[a], sq[b])
        } else {
            (sq[b], sq[a])
        };
        match rat_is_square(&(lo / hi)) {
            Some(ratio) => {
                let (m, k) = (ratio.numer().clone(), ratio.denom().clone());
                let n: BigInt = &m * &m + &k * &k;
                match is_perfect_square(n.clone()) {
                    None => v.push(
                        2,
                        Witness::Right {
                            m: Int(m),
                            k: Int(k),
                            sum_of_squares: Int(n),
                        },
                        TileShape::right(None),
                    ),
                    Some(root) => v.note(format!(
                        "right triangle with legs ratio {m}/{k}: M^2 + K^2 = {root}^2 is a square"
                    )),
                }
            }
            None => v.note("right angle with legs in irrational ratio"),
        }
    }
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| sq[i].cmp(sq[j]));
    let [i0, i1, i2] = order;
    if *sq[i1] == Rational::from(3) * sq[i0] && *sq[i2] == Rational::from(4) * sq[i0] {
        v.push(
            3,
            Witness::ThirtySixtyNinety { perm: [i0, i2, i1] },
            TileShape::right(None),
        );
    }

    // Conditions 4 to 8 force rational cosines and commensurable sides.
    let (Some(r0), Some(r1)) = (
        rat_is_square(&(sq[0] / sq[2])),
        rat_is_square(&(sq[1] / sq[2])),
    ) else {
        v.note("incommensurable sides; conditions 4 to 8 do not apply");
        return Ok(());
    };
    let data = angle_data_from_sides(&r0, &r1, &Rational::one())?;
    if data.has_commensurable_angles() {
        v.note(COMMENSURABLE_NOTE);
        return Ok(());
    }
    relation_conditions(&data, &[4, 5, 6, 7, 8], None, v)
}

fn classify_family(tag: FamilyTag, params: &[Rational], v: &mut Verdict) -> Result<()> {
    let [a, b, c] = family_sides(tag, params)?;
    let data = angle_data_from_sides(&a, &b, &c)?;
    let supplied = match tag {
        FamilyTag::HalfSum => Some(half_sum_pair(params)?),
        _ => None,
    };
    relation_conditions(&data, &[tag.condition()], supplied, v)?;
    if v.conditions.is_empty() {
        v.note(format!(
            "family {tag} member fails condition {}",
            tag.condition()
        ));
    }
    Ok(())
}

/// Conditions 4 to 8 on exact angle data. `supplied` overrides the reported
/// `(M, K)` of condition 7.
fn relation_conditions(
    data: &AngleData,
    conditions: &[u8],
    supplied: Option<(BigInt, BigInt)>,
    v: &mut Verdict,
) -> Result<()> {
    let angles = TriangleAngles::Cosines(data.clone());
    for &cond in conditions {
        let relation = match cond {
            4 => AngleRelation::C60,
            5 | 6 => AngleRelation::B2A,
            7 => AngleRelation::CHalfSum,
            8 => AngleRelation::CTwoPlusHalf,
            _ => unreachable!(),
        };
        let perms = all_permutations(&angles, relation);
        let mut found = false;
        for perm in perms.iter().copied() {
            let cos_a = data.cos(perm[0]);
            match cond {
                4 | 5 | 8 => {
                    if let Some((q, t)) = test_sqrt3_tan_half(cos_a)? {
                        let shape = tile_shape_for(cond, &t)?;
                        v.push(cond, Witness::TanHalf { perm, q, t }, shape);
                        found = true;
                    }
                }
                6 => {
                    if let Some(sin_half) = test_sin_half(cos_a)? {
                        let s = Rational::from(2) * &sin_half;
                        let shape = tile_shape_for(cond, &s)?;
                        v.push(cond, Witness::SinHalf { perm, sin_half, s }, shape);
                        found = true;
                    }
                }
                _ => {
                    let Some((m, k)) = test_two_sin_quarter(cos_a)? else {
                        continue;
                    };
                    let (m, k) = (m.numer().clone(), k.numer().clone());
                    let (sm, sk, reduced) = match &supplied {
                        Some((sm, sk)) if (sm, sk) != (&m, &k) => (
                            sm.clone(),
                            sk.clone(),
                            Some([Int(m.clone()), Int(k.clone())]),
                        ),
                        _ => (m.clone(), k.clone(), None),
                    };
                    let n: BigInt = BigInt::from(2) * &sk * &sk - &sm * &sm;
                    if let Some(root) = is_perfect_square(n.clone()) {
                        v.note(format!(
                            "condition 7: 2K^2 - M^2 = {n} = {root}^2 is a square for (M, K) = ({sm}, {sk})"
                        ));
                        continue;
                    }
                    let shape = tile_shape_for(cond, &Rational::new(m, k)?)?;
                    v.push(
                        cond,
                        Witness::TwoSinQuarter {
                            perm,
                            m: Int(sm),
                            k: Int(sk),
                            n: Int(n),
                            reduced,
                        },
                        shape,
                    );
                    found = true;
                }
            }
            if found {
                break;
            }
        }
        if !found && !perms.is_empty() && cond != 7 {
            v.note(format!(
                "angle relation {relation:?} holds but the rationality test of condition {cond} fails"
            ));
        }
    }
    Ok(())
}
