use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::kernel::Rational;

/// Parametric families of triangles with incommensurable angles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    /// `C = pi/3`, parameter `t` with `cos A = (1 - 3t^2)/(1 + 3t^2)`.
    C60,
    /// `B = 2A`, parameter `t` as for `C60`.
    B2aTan,
    /// `B = 2A`, parameter `s = 2 sin(A/2)`.
    B2aSin,
    /// `C = A/2 + B`, parameters `(M, K)` with `2 sin(A/4) = M/K`.
    HalfSum,
    /// `C = 2A + B/2`, parameter `t` as for `C60`.
    TwoPlusHalf,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 5] = [
        FamilyTag::C60,
        FamilyTag::B2aTan,
        FamilyTag::B2aSin,
        FamilyTag::HalfSum,
        FamilyTag::TwoPlusHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::C60 => "C60",
            FamilyTag::B2aTan => "B2A_TAN",
            FamilyTag::B2aSin => "B2A_SIN",
            FamilyTag::HalfSum => "HALF_SUM",
            FamilyTag::TwoPlusHalf => "TWO_PLUS_HALF",
        }
    }

    /// The classifier condition this family certifies.
    pub fn condition(self) -> u8 {
        match self {
            FamilyTag::C60 => 4,
            FamilyTag::B2aTan => 5,
            FamilyTag::B2aSin => 6,
            FamilyTag::HalfSum => 7,
            FamilyTag::TwoPlusHalf => 8,
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let up = s.trim().to_ascii_uppercase().replace('-', "_");
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name() == up)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family tag {s:?}")))
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Checks `lo < x < hi`; a value on the boundary is a degenerate member.
fn check_open(name: &str, x: &Rational, lo: &Rational, hi: &Rational) -> Result<()> {
    if x == lo || x == hi {
        return Err(Error::DegenerateFamily(format!(
            "{name} = {x} is a boundary value of ({lo}, {hi}); the angles become commensurable"
        )));
    }
    if x < lo || x > hi {
        return Err(Error::OutOfRange(format!(
            "{name} = {x} is outside ({lo}, {hi})"
        )));
    }
    Ok(())
}

fn expect_params(tag: FamilyTag, params: &[Rational], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::InvalidInput(format!(
            "family {tag} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// `cos A = (1 - 3t^2)/(1 + 3t^2)`.
pub fn cos_from_t(t: &Rational) -> Rational {
    let t3 = Rational::from(3) * t.square();
    (Rational::one() - &t3) / (Rational::one() + &t3)
}

/// Positive integer pair `(M, K)` from the HALF_SUM parameters.
pub fn half_sum_pair(params: &[Rational]) -> Result<(BigInt, BigInt)> {
    expect_params(FamilyTag::HalfSum, params, 2)?;
    let mut out = Vec::with_capacity(2);
    for p in params {
        match p.to_integer() {
            Some(n) if p.is_positive() => out.push(n),
            _ => {
                return Err(Error::InvalidInput(format!(
                    "HALF_SUM parameters must be positive integers, got {p}"
                )))
            }
        }
    }
    let k = out.pop().unwrap();
    let m = out.pop().unwrap();
    Ok((m, k))
}

/// Checks the parameter ranges and returns the side lengths opposite
/// `(A, B, C)` of the family member.
pub fn family_sides(tag: FamilyTag, params: &[Rational]) -> Result<[Rational; 3]> {
    let zero = Rational::zero();
    let one = Rational::one();
    let two = Rational::from(2);
    let third = Rational::frac(1, 3);
    // sides proportional to sin A, sin 2A, sin 3A
    let double_angle = |c: Rational| {
        let b = &two * &c;
        let c3 = Rational::from(4) * c.square() - &one;
        [one.clone(), b, c3]
    };
    match tag {
        FamilyTag::C60 => {
            expect_params(tag, params, 1)?;
            let t = &params[0];
            check_open("t", t, &zero, &third)?;
            let t2 = t.square();
            Ok([
                Rational::from(4) * t,
                &one + &(&two * t) - Rational::from(3) * &t2,
                &one + &(Rational::from(3) * &t2),
            ])
        }
        FamilyTag::B2aTan => {
            expect_params(tag, params, 1)?;
            check_open("t", &params[0], &zero, &third)?;
            Ok(double_angle(cos_from_t(&params[0])))
        }
        FamilyTag::B2aSin => {
            expect_params(tag, params, 1)?;
            let s = &params[0];
            check_open("s", s, &zero, &one)?;
            Ok(double_angle(&one - &(s.square() / &two)))
        }
        FamilyTag::HalfSum => {
            let (m, k) = half_sum_pair(params)?;
            let s = Rational::new(m, k)?;
            check_open("M/K", &s, &zero, &one)?;
            let s2 = s.square();
            Ok([&s * &(&two - &s2), &one - &s2, one.clone()])
        }
        FamilyTag::TwoPlusHalf => {
            expect_params(tag, params, 1)?;
            let t = &params[0];
            check_open("t", t, &zero, &third)?;
            // sigma = sin A / sqrt(3)
            let sigma = &two * t / (&one + &(Rational::from(3) * t.square()));
            let c = cos_from_t(t);
            Ok([
                &two * &sigma,
                &two * &c.square() - &one + &two * &sigma * &c,
                &sigma + &c,
            ])
        }
    }
}
