//! Elliptic curves over Q and the non-square predicates they certify.

mod curve;
mod nonsquare;
mod quartic;
mod search;
mod torsion;

pub use curve::{ECPoint, EllipticCurve};
pub use nonsquare::{
    check_eisenstein_pair, eval_nonsquare_double_angle, eval_nonsquare_sin_half,
    eval_nonsquare_two_plus_half, eval_nonsquare_two_plus_half_variant, is_perfect_square,
    ConstantSign, EisensteinSquareReport,
};
pub use quartic::{quartic_point_map, quartic_point_unmap, quartic_to_weierstrass, QuarticCurve};
pub use search::{rational_point_search, MAX_SEARCH_HEIGHT};
pub use torsion::{torsion_points, GroupStructure, TorsionGroup, TorsionPoint, MAX_TORSION_ORDER};

/// A curve whose rational points control one of the non-square claims.
#[derive(Debug, Clone, Copy)]
pub struct KnownCurve {
    pub name: &'static str,
    pub curve: EllipticCurve,
    /// Quartic `s^2 = t^4 + a t^2 + b` it comes from, when there is one.
    pub quartic: Option<QuarticCurve>,
    /// LMFDB label quoted for the curve; documentation only.
    pub lmfdb_label: &'static str,
}

/// `y^2 = x^3 + 2x^2 - 3x`, from `s^2 = t^4 - t^2 + 1`; controls coprime
/// Eisenstein triples with `a(a+b)` square.
pub const EISENSTEIN_CURVE: KnownCurve = KnownCurve {
    name: "eisenstein",
    curve: EllipticCurve {
        a2: 2,
        a1: -3,
        a0: 0,
    },
    quartic: Some(QuarticCurve { a: -1, b: 1 }),
    lmfdb_label: "96.b1",
};

/// `y^2 = x^3 + 10x^2 + x`, from `s^2 = (t^2 - 2)(t^2 - 3)`.
pub const SIN_HALF_CURVE: KnownCurve = KnownCurve {
    name: "sin-half",
    curve: EllipticCurve {
        a2: 10,
        a1: 1,
        a0: 0,
    },
    quartic: Some(QuarticCurve { a: -5, b: 6 }),
    lmfdb_label: "96.b1",
};

/// `y^2 = (x^2 + 18x - 27) x`, reached by `t = (x+3)/(x-9)`.
pub const DOUBLE_ANGLE_CURVE: KnownCurve = KnownCurve {
    name: "double-angle",
    curve: EllipticCurve {
        a2: 18,
        a1: -27,
        a0: 0,
    },
    quartic: None,
    lmfdb_label: "144.a1",
};

/// `y^2 = (x^2 + 6x - 3) x`, reached by `t = (x-1)/(x+3)`.
pub const TWO_PLUS_HALF_CURVE: KnownCurve = KnownCurve {
    name: "two-plus-half",
    curve: EllipticCurve {
        a2: 6,
        a1: -3,
        a0: 0,
    },
    quartic: None,
    lmfdb_label: "36.a2",
};

pub const KNOWN_CURVES: [KnownCurve; 4] = [
    EISENSTEIN_CURVE,
    SIN_HALF_CURVE,
    DOUBLE_ANGLE_CURVE,
    TWO_PLUS_HALF_CURVE,
];
