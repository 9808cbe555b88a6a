use serde::Serialize;

use super::angles::AngleData;
use crate::kernel::Rational;

/// Angle relations among `(A, B, C)` tested by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AngleRelation {
    /// `C = pi/3`
    C60,
    /// `B = 2A`
    B2A,
    /// `C = A/2 + B`
    CHalfSum,
    /// `C = 2A + B/2`
    CTwoPlusHalf,
    Isosceles,
    Right,
    /// `(A, B, C) = (pi/6, pi/2, pi/3)`
    ThirtySixtyNinety,
}

/// Angles known either through exact cosines or as rational multiples of pi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangleAngles {
    Cosines(AngleData),
    PiMultiples([Rational; 3]),
}

/// Assignment of the triangle's angle indices to the roles `(A, B, C)`.
pub type Permutation = [usize; 3];

const PERMUTATIONS: [Permutation; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// First permutation, in lexicographic order, under which `relation` holds.
pub fn check_angle_relation(
    angles: &TriangleAngles,
    relation: AngleRelation,
) -> Option<Permutation> {
    all_permutations(angles, relation).into_iter().next()
}

/// Every permutation under which `relation` holds.
pub fn all_permutations(angles: &TriangleAngles, relation: AngleRelation) -> Vec<Permutation> {
    PERMUTATIONS
        .into_iter()
        .filter(|&p| match angles {
            TriangleAngles::Cosines(d) => holds_cos(d, relation, p),
            TriangleAngles::PiMultiples(m) => holds_pi(m, relation, p),
        })
        .collect()
}

fn holds_pi(m: &[Rational; 3], relation: AngleRelation, [a, b, c]: Permutation) -> bool {
    let (a, b, c) = (&m[a], &m[b], &m[c]);
    let half = Rational::frac(1, 2);
    let two = Rational::from(2);
    match relation {
        AngleRelation::C60 => *c == Rational::frac(1, 3) && a < b,
        AngleRelation::B2A => *b == &two * a,
        AngleRelation::CHalfSum => *c == &(a * &half) + b,
        AngleRelation::CTwoPlusHalf => *c == &(&two * a) + &(b * &half),
        AngleRelation::Isosceles => a == b,
        AngleRelation::Right => *c == half && a <= b,
        AngleRelation::ThirtySixtyNinety => {
            *a == Rational::frac(1, 6) && *b == half && *c == Rational::frac(1, 3)
        }
    }
}

fn holds_cos(d: &AngleData, relation: AngleRelation, [a, b, c]: Permutation) -> bool {
    let one = Rational::one();
    let two = Rational::from(2);
    let double_cos = |x: &Rational| &two * &x.square() - &one;
    let (ca, cb, cc) = (d.cos(a), d.cos(b), d.cos(c));
    match relation {
        // A is the smaller of the two remaining angles.
        AngleRelation::C60 => *cc == Rational::frac(1, 2) && ca > cb,
        // cos is injective on (0, pi) and 2A = 2pi - B is impossible.
        AngleRelation::B2A => *cb == double_cos(ca),
        // A = 2(C - B) with C > B; cos(C - B) = cos B cos C + sin B sin C.
        AngleRelation::CHalfSum => cc < cb && *ca == double_cos(&(cb * cc + d.sinprod(b, c))),
        // B = 2(C - 2A) with C > 2A, which needs A < pi/2;
        // cos(C - 2A) = cos C cos 2A + 2 cos A sin A sin C.
        AngleRelation::CTwoPlusHalf => {
            let cos_2a = double_cos(ca);
            ca.is_positive()
                && *cc < cos_2a
                && *cb == double_cos(&(cc * &cos_2a + &two * ca * d.sinprod(a, c)))
        }
        AngleRelation::Isosceles => ca == cb,
        AngleRelation::Right => cc.is_zero() && ca >= cb,
        // Two of the cosines would be irrational.
        AngleRelation::ThirtySixtyNinety => false,
    }
}

#[cfg(test)]
mod tests {
    use super::super::angles::angle_data_from_sides;
    use super::*;

    fn cos_of(a: i64, b: i64, c: i64) -> TriangleAngles {
        TriangleAngles::Cosines(angle_data_from_sides(&a.into(), &b.into(), &c.into()).unwrap())
    }

    #[test]
    fn right_triangle_relations() {
        let t = cos_of(3, 4, 5);
        assert_eq!(
            check_angle_relation(&t, AngleRelation::Right),
            Some([0, 1, 2])
        );
        for rel in [
            AngleRelation::C60,
            AngleRelation::B2A,
            AngleRelation::CHalfSum,
            AngleRelation::CTwoPlusHalf,
            AngleRelation::Isosceles,
            AngleRelation::ThirtySixtyNinety,
        ] {
            assert_eq!(check_angle_relation(&t, rel), None, "{rel:?}");
        }
    }

    #[test]
    fn thirty_sixty_ninety_from_pi_multiples() {
        let t = TriangleAngles::PiMultiples([
            Rational::frac(1, 6),
            Rational::frac(1, 2),
            Rational::frac(1, 3),
        ]);
        assert_eq!(
            check_angle_relation(&t, AngleRelation::ThirtySixtyNinety),
            Some([0, 1, 2])
        );
        assert_eq!(
            check_angle_relation(&t, AngleRelation::Right),
            Some([0, 2, 1])
        );
        assert_eq!(
            check_angle_relation(&t, AngleRelation::C60),
            Some([0, 1, 2])
        );
        assert_eq!(check_angle_relation(&t, AngleRelation::Isosceles), None);
    }

    #[test]
    fn isosceles_from_sides() {
        let t = TriangleAngles::Cosines(
            angle_data_from_sides(&1.into(), &1.into(), &Rational::frac(3, 2)).unwrap(),
        );
        assert_eq!(
            check_angle_relation(&t, AngleRelation::Isosceles),
            Some([0, 1, 2])
        );
    }

    #[test]
    fn double_angle_from_sides() {
        // (2, 3, 4)-tile angles: no B = 2A; (4, 5, 6) has the 2A relation.
        let t = cos_of(4, 5, 6);
        assert_eq!(
            check_angle_relation(&t, AngleRelation::B2A),
            Some([0, 2, 1])
        );
    }

    #[test]
    fn half_sum_and_two_plus_half() {
        // sides (7, 6, 8): A = 2 alpha, C = A/2 + B
        let t = cos_of(7, 6, 8);
        assert_eq!(
            check_angle_relation(&t, AngleRelation::CHalfSum),
            Some([0, 1, 2])
        );
        assert_eq!(check_angle_relation(&t, AngleRelation::CTwoPlusHalf), None);
    }
}
