use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classify::{group1_sides, primitive_triple, Int, TileKind, TileShape};
use crate::error::{Error, Result};
use crate::kernel::{rat_is_square, Rational};
use crate::numtheory::{
    check_eisenstein_pair, eval_nonsquare_double_angle, eval_nonsquare_sin_half,
    eval_nonsquare_two_plus_half, is_perfect_square,
};

/// Tile count, or its square class, for one of cases 4 to 8.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountCertificate {
    pub case_id: u8,
    pub params: BTreeMap<&'static str, String>,
    /// The tile count itself when `n_is_count`, otherwise a representative
    /// of its class modulo rational squares.
    pub n_expression: Rational,
    pub n_is_count: bool,
    pub is_square_possible: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub square_root: Option<Int>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tile: Option<TileShape>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CountCertificate {
    fn new(case_id: u8, n_expression: Rational, n_is_count: bool) -> Self {
        let is_square_possible = rat_is_square(&n_expression).is_some();
        CountCertificate {
            case_id,
            params: BTreeMap::new(),
            n_expression,
            n_is_count,
            is_square_possible,
            square_root: None,
            tile: None,
            notes: Vec::new(),
        }
    }

    fn param(mut self, name: &'static str, v: impl ToString) -> Self {
        self.params.insert(name, v.to_string());
        self
    }
}

/// `N = m^2 b (a + b)` for the tile `(a, b, c)` with `c^2 = a^2 + ab + b^2`.
pub fn count_case4(a: u64, b: u64, m: u64) -> Result<CountCertificate> {
    if m == 0 {
        return Err(Error::OutOfRange("m must be positive".into()));
    }
    let report = check_eisenstein_pair(b, a)?;
    let Some(c) = report.eisenstein_root.clone() else {
        return Err(Error::InvalidInput(format!(
            "a^2 + ab + b^2 = {} is not a square",
            report.eisenstein_norm
        )));
    };
    let n = BigInt::from(m).pow(2) * &report.a_times_a_plus_b;
    let mut cert = CountCertificate::new(4, Rational::from(n), true)
        .param("a", a)
        .param("b", b)
        .param("m", m);
    cert.tile = Some(TileShape {
        kind: TileKind::Group2,
        sides: Some(primitive_triple(&[
            u64_rat(a),
            u64_rat(b),
            Rational::from(c),
        ])),
        angle_relation: "gamma = 2*pi/3",
    });
    Ok(cert)
}

fn u64_rat(x: u64) -> Rational {
    Rational::from(BigInt::from(x))
}

/// `N = M^2 (2 - s^2)(3 - s^2) / ((1 - s)^2 (2 + s)^2)` with `s = a/c` of the tile.
pub fn count_case6(m: u64, s: &Rational) -> Result<CountCertificate> {
    if m == 0 {
        return Err(Error::OutOfRange("M must be positive".into()));
    }
    let one = Rational::one();
    if *s == one {
        return Err(Error::Pole(s.to_string()));
    }
    if !s.is_positive() || *s > one {
        return Err(Error::OutOfRange(format!("s = {s} is outside (0, 1)")));
    }
    let two = Rational::from(2);
    let num = eval_nonsquare_sin_half(s);
    let den = (&one - s).square() * (&two + s).square();
    let n = u64_rat(m).square() * &num / den;
    let mut cert = CountCertificate::new(6, n, true)
        .param("M", m)
        .param("s", s);
    // N is a square exactly when (2 - s^2)(3 - s^2) is
    cert.is_square_possible = rat_is_square(&num).is_some();
    cert.tile = Some(TileShape::group1(group1_sides(s)));
    Ok(cert)
}

/// `N = 2K^2 - M^2` and the tile `(M, K - M^2/K, K)`; needs `K | M^2`, `M < K`.
pub fn triquadratic_params(m: u64, k: u64) -> Result<CountCertificate> {
    if m == 0 || m >= k {
        return Err(Error::InvalidInput(format!(
            "need 0 < M < K, got ({m}, {k})"
        )));
    }
    let (mb, kb) = (BigInt::from(m), BigInt::from(k));
    let m2 = &mb * &mb;
    if &m2 % &kb != BigInt::from(0) {
        return Err(Error::InvalidInput(format!(
            "K = {k} does not divide M^2 = {m2}"
        )));
    }
    let n = BigInt::from(2) * &kb * &kb - &m2;
    let mut cert = CountCertificate::new(7, Rational::from(n.clone()), true)
        .param("M", m)
        .param("K", k);
    let root = is_perfect_square(n);
    cert.is_square_possible = root.is_some();
    cert.square_root = root.map(Int);
    cert.tile = Some(TileShape::group1(group1_sides(&Rational::new(m, k)?)));
    if !k.is_multiple_of(m) {
        cert.notes.push(format!("M = {m} does not divide K = {k}"));
    }
    Ok(cert)
}

fn check_t(t: &Rational) -> Result<()> {
    if *t == Rational::one() || *t == Rational::frac(-1, 3) {
        return Err(Error::Pole(t.to_string()));
    }
    let third = Rational::frac(1, 3);
    if t.is_zero() || *t == third {
        return Err(Error::DegenerateFamily(format!(
            "t = {t} is a boundary value of (0, 1/3); the angles become commensurable"
        )));
    }
    if t.is_negative() || *t > third {
        return Err(Error::OutOfRange(format!("t = {t} is outside (0, 1/3)")));
    }
    Ok(())
}

/// Square class of `N` when `B = 2A` and `sqrt(3) tan(A/2) = 3t`.
pub fn count_case5(t: &Rational) -> Result<CountCertificate> {
    check_t(t)?;
    Ok(CountCertificate::new(5, eval_nonsquare_double_angle(t)?, false).param("t", t))
}

/// Square class of `N` when `C = 2A + B/2` and `sqrt(3) tan(A/2) = 3t`.
pub fn count_case8(t: &Rational) -> Result<CountCertificate> {
    check_t(t)?;
    Ok(CountCertificate::new(8, eval_nonsquare_two_plus_half(t)?, false).param("t", t))
}
