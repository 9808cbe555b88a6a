use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use tritile::Rational;

/// Sign of `a + b sqrt(d)` from a 200-bit fixed-point approximation of `sqrt(d)`.
pub fn fixed_point_sign(a: &Rational, b: &Rational, d: u64) -> i32 {
    let scale = BigInt::from(1) << 200u32;
    let s = (BigInt::from(d) * &scale * &scale).sqrt();
    let big_a = a.numer() * b.denom();
    let big_b = b.numer() * a.denom();
    let approx = &big_a * &scale + &big_b * &s;
    // |approx - exact * 2^200| < |B|
    assert!(
        approx.abs() > big_b.abs() || (big_a.is_zero() && big_b.is_zero()),
        "oracle precision exhausted"
    );
    if big_a.is_zero() && big_b.is_zero() {
        0
    } else if approx.is_positive() {
        1
    } else {
        -1
    }
}
