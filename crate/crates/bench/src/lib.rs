//! Inputs shared by the benchmarks.

use tritile::construct::{
    biquadratic_tiling, hexagonal_tiling, outer_from_sides, quadratic_tiling,
};
use tritile::{QuadVal, Rational, SideLength, Tiling};

/// Named tilings of increasing size.
pub fn tilings() -> Vec<(String, Tiling)> {
    let side = |n: i64| SideLength::rational(n.into()).unwrap();
    let outer = outer_from_sides(&side(3), &side(4), &side(5)).unwrap();
    vec![
        ("quadratic_12".into(), quadratic_tiling(outer, 12).unwrap()),
        ("hexagonal_5".into(), hexagonal_tiling(5).unwrap()),
        ("biquadratic_7_6".into(), biquadratic_tiling(7, 6).unwrap()),
    ]
}

/// Values `a + b sqrt(d)` with `a` close to `-b sqrt(d)`.
pub fn near_zero_quads(count: usize) -> Vec<QuadVal> {
    (1..=count as i64)
        .map(|i| {
            let d = [2u64, 3, 5, 6, 7, 10, 11, 13][i as usize % 8];
            let b = 1000 + 37 * i;
            let a = -((b as f64) * (d as f64).sqrt()).floor() as i64;
            QuadVal::new(Rational::from(a), Rational::from(b), d).unwrap()
        })
        .collect()
}
