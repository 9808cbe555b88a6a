//! Integer and rational square tests and squarefree decomposition.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// `Some(r)` with `r >= 0` and `r * r == n` when `n` is a perfect square.
pub fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// The non-negative rational square root of `q`, if it exists.
///
/// In lowest terms `q` is a square exactly when numerator and denominator
/// both are.
pub fn rat_is_square(q: &Rational) -> Option<Rational> {
    let n = isqrt_exact(q.numer())?;
    let d = isqrt_exact(q.denom())?;
    Some(Rational::new(n, d).expect("denominator root is positive"))
}

/// Writes `n = s * f^2` with `s` squarefree. `n` must be positive.
pub fn squarefree_part(n: u64) -> (u64, u64) {
    assert!(n >= 1, "squarefree_part needs n >= 1");
    let (s, f) = squarefree_part_big(&BigUint::from(n));
    (s.to_u64().unwrap(), f.to_u64().unwrap())
}

/// Big-integer version of [`squarefree_part`].
///
/// Trial division runs only while `d^3 <= rest`; what is left then has at most
/// two prime factors, so it is either a prime square or squarefree.
pub fn squarefree_part_big(n: &BigUint) -> (BigUint, BigUint) {
    assert!(!n.is_zero(), "squarefree_part needs n >= 1");
    if let Some(small) = n.to_u128() {
        let (s, f) = squarefree_part_u128(small);
        return (BigUint::from(s), BigUint::from(f));
    }
    let mut rest = n.clone();
    let mut s = BigUint::one();
    let mut f = BigUint::one();
    let mut d = BigUint::from(2u32);
    while &d * &d * &d <= rest {
        let mut e = 0u32;
        while (&rest % &d).is_zero() {
            rest /= &d;
            e += 1;
        }
        for _ in 0..e / 2 {
            f *= &d;
        }
        if e % 2 == 1 {
            s *= &d;
        }
        d += 1u32;
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        f *= r;
    } else {
        s *= rest;
    }
    (s, f)
}

fn squarefree_part_u128(n: u128) -> (u128, u128) {
    let mut rest = n;
    let (mut s, mut f) = (1u128, 1u128);
    let mut d: u128 = 2;
    while d * d * d <= rest {
        let mut e = 0;
        while rest.is_multiple_of(d) {
            rest /= d;
            e += 1;
        }
        for _ in 0..e / 2 {
            f *= d;
        }
        if e % 2 == 1 {
            s *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let r = rest.sqrt();
    if r * r == rest {
        f *= r;
    } else {
        s *= rest;
    }
    (s, f)
}

pub fn is_squarefree(n: u64) -> bool {
    n >= 1 && squarefree_part(n).1 == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_squares() {
        assert_eq!(
            rat_is_square(&Rational::frac(4, 9)),
            Some(Rational::frac(2, 3))
        );
        assert_eq!(rat_is_square(&Rational::from(6)), None);
        assert_eq!(
            rat_is_square(&Rational::from(1225)),
            Some(Rational::from(35))
        );
        assert_eq!(rat_is_square(&Rational::from(-4)), None);
        assert_eq!(rat_is_square(&Rational::zero()), Some(Rational::zero()));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(48), (3, 4));
        assert_eq!(squarefree_part(1), (1, 1));
        assert_eq!(squarefree_part(675), (3, 15));
        assert_eq!(squarefree_part(49), (1, 7));
        assert_eq!(squarefree_part(2 * 101 * 101), (2, 101));
        assert_eq!(
            squarefree_part(1_000_003 * 999_983),
            (1_000_003 * 999_983, 1)
        );
    }

    #[test]
    fn squarefree_big_beyond_u128() {
        let p = BigUint::from(1_000_003u64);
        let n = BigUint::from(u128::MAX) + 1u32; // 2^128
        let (s, f) = squarefree_part_big(&(&n * &p));
        assert_eq!(s, p);
        assert_eq!(f, BigUint::from(1u128 << 64));
    }

    #[test]
    fn squarefree_decomposition_exhaustive() {
        for n in 1..=100_000u64 {
            let (s, f) = squarefree_part(n);
            assert_eq!(s * f * f, n);
            assert!(is_squarefree_brute(s), "{n} -> {s}");
        }
    }

    fn is_squarefree_brute(n: u64) -> bool {
        (2..)
            .take_while(|p| p * p <= n)
            .all(|p| !n.is_multiple_of(p * p))
    }
}
