use std::path::PathBuf;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tritile::construct::{
    biquadratic_tiling, bisect_isosceles, hexagonal_tiling, outer_from_sides, quadratic_tiling,
    tri_306090_tiling,
};
use tritile::geometry::{interiors_intersect, PlacedTile, Point2, Tiling};
use tritile::io::{parse_tiling, serialize_tiling};
use tritile::{verify, QuadVal, Rational, SideLength};

type P = (Rational, Rational);

fn cross(o: &P, a: &P, b: &P) -> Rational {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

fn shoelace2(poly: &[P]) -> Rational {
    let n = poly.len();
    (0..n)
        .map(|i| {
            let (p, q) = (&poly[i], &poly[(i + 1) % n]);
            &p.0 * &q.1 - &q.0 * &p.1
        })
        .sum()
}

fn ccw(mut t: Vec<P>) -> Vec<P> {
    if shoelace2(&t) < Rational::zero() {
        t.reverse();
    }
    t
}

/// Sutherland-Hodgman clip of `subject` against the convex `clip`, both ccw.
fn clip(subject: &[P], clip: &[P]) -> Vec<P> {
    let mut out = subject.to_vec();
    for i in 0..clip.len() {
        let (a, b) = (&clip[i], &clip[(i + 1) % clip.len()]);
        let input = std::mem::take(&mut out);
        for j in 0..input.len() {
            let (p, q) = (&input[j], &input[(j + 1) % input.len()]);
            let (cp, cq) = (cross(a, b, p), cross(a, b, q));
            let zero = Rational::zero();
            if cp >= zero {
                out.push(p.clone());
            }
            if (cp > zero && cq < zero) || (cp < zero && cq > zero) {
                let t = &cp / &(&cp - &cq);
                out.push((&p.0 + &(&(&q.0 - &p.0) * &t), &p.1 + &(&(&q.1 - &p.1) * &t)));
            }
        }
        if out.is_empty() {
            break;
        }
    }
    out
}

fn overlap_area2(t1: &[P], t2: &[P]) -> Rational {
    let poly = clip(&ccw(t1.to_vec()), &ccw(t2.to_vec()));
    if poly.len() < 3 {
        return Rational::zero();
    }
    shoelace2(&poly)
}

fn rat_pt() -> impl Strategy<Value = P> {
    (-4i64..=4, -4i64..=4, 1i64..=2)
        .prop_map(|(x, y, d)| (Rational::frac(x, d), Rational::frac(y, d)))
}

fn triangle() -> impl Strategy<Value = Vec<P>> {
    prop::collection::vec(rat_pt(), 3)
        .prop_filter("non-degenerate", |v| !cross(&v[0], &v[1], &v[2]).is_zero())
}

fn placed(v: &[P]) -> PlacedTile {
    let p = |q: &P| Point2::rational(q.0.clone(), q.1.clone());
    PlacedTile::new(p(&v[0]), p(&v[1]), p(&v[2])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn overlap_matches_clipping_oracle(t1 in triangle(), t2 in triangle()) {
        let (a, b) = (placed(&t1), placed(&t2));
        let exact = interiors_intersect(&a, &b).unwrap();
        prop_assert_eq!(exact, interiors_intersect(&b, &a).unwrap());
        prop_assert_eq!(exact, overlap_area2(&t1, &t2) > Rational::zero());
    }
}

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture_texts() -> Vec<(String, String)> {
    let mut out: Vec<_> = std::fs::read_dir(fixtures_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.to_string_lossy().ends_with(".tiling.json"))
        .map(|p| {
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, std::fs::read_to_string(&p).unwrap())
        })
        .collect();
    out.sort();
    out
}

fn side(n: i64) -> SideLength {
    SideLength::rational(n.into()).unwrap()
}

fn sample_tilings() -> Vec<Tiling> {
    let outer = outer_from_sides(&side(3), &side(4), &side(5)).unwrap();
    let height = SideLength::from_square(Rational::from(3)).unwrap();
    let mut out = vec![
        quadratic_tiling(outer, 3).unwrap(),
        hexagonal_tiling(1).unwrap(),
        biquadratic_tiling(2, 3).unwrap(),
        tri_306090_tiling(2).unwrap(),
        bisect_isosceles(&Rational::from(2), &height).unwrap(),
    ];
    out.extend(
        fixture_texts()
            .iter()
            .map(|(_, s)| parse_tiling(s).unwrap()),
    );
    out
}

fn summary(t: &Tiling) -> (bool, usize, [bool; 4]) {
    let r = verify(t);
    let c = &r.checks;
    (
        r.valid,
        r.n_tiles,
        [
            c.congruence.pass,
            c.area.pass,
            c.overlap.pass,
            c.containment.pass,
        ],
    )
}

#[test]
fn samples_are_valid() {
    for t in sample_tilings() {
        assert!(verify(&t).valid);
    }
}

#[test]
fn verify_invariances() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for t in sample_tilings() {
        let base = summary(&t);
        let d = t.disc;
        let shift = |a: i64, b: i64| {
            if d == 1 {
                QuadVal::rational(Rational::frac(a, b))
            } else {
                QuadVal::new(Rational::frac(a, b), Rational::frac(b, a + 7), d).unwrap()
            }
        };
        assert_eq!(summary(&t.translate(&shift(3, 7), &shift(-5, 2))), base);
        assert_eq!(summary(&t.reflect_x()), base);

        let mut relabeled = t.clone();
        for tile in relabeled.tiles.iter_mut() {
            *tile = tile.relabeled(*perms.choose(&mut rng).unwrap());
        }
        assert_eq!(summary(&relabeled), base);

        let mut shuffled = t.clone();
        shuffled.tiles.shuffle(&mut rng);
        assert_eq!(summary(&shuffled), base);
    }
}

#[test]
fn damaged_tilings_fail() {
    for t in sample_tilings() {
        if t.len() < 2 {
            continue;
        }
        let mut missing = t.clone();
        missing.tiles.remove(t.len() / 2);
        let r = verify(&missing);
        assert!(!r.valid);
        assert!(!r.checks.area.pass);

        let mut doubled = t.clone();
        let i = t.len() / 3;
        doubled.tiles.push(t.tiles[i].clone());
        let r = verify(&doubled);
        assert!(!r.valid);
        assert!(!r.checks.overlap.pass);
        let pair = r.checks.overlap.counterexample.unwrap();
        assert_eq!(pair.len(), 2);
        assert!(interiors_intersect(&doubled.tiles[pair[0]], &doubled.tiles[pair[1]]).unwrap());

        let mut nudged = t.clone();
        let v = &mut nudged.tiles[0].v[1];
        v.x = &v.x + &QuadVal::rational(Rational::frac(1, 1000));
        assert!(!verify(&nudged).valid);
    }
}

#[test]
fn fixtures_round_trip() {
    let fixtures = fixture_texts();
    assert!(fixtures.len() >= 6);
    for (name, text) in fixtures {
        let t = parse_tiling(&text).unwrap();
        let again = serialize_tiling(&t);
        assert_eq!(parse_tiling(&again).unwrap(), t, "{name}");
        assert_eq!(
            serialize_tiling(&parse_tiling(&again).unwrap()),
            again,
            "{name}"
        );
        assert!(verify(&t).valid, "{name}");
    }
}
