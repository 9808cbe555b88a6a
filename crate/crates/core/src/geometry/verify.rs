use std::cmp::Ordering;

use rayon::prelude::*;
use serde::Serialize;

use super::tile::{interiors_intersect, tile_congruent, PlacedTile};
use super::Point2;
use super::Tiling;
use crate::kernel::{QuadVal, Rational};
use crate::numtheory::is_perfect_square;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    /// Tile indices of the first failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn ok() -> Self {
        CheckResult {
            pass: true,
            counterexample: None,
            detail: None,
        }
    }

    fn fail(counterexample: Option<Vec<usize>>, detail: impl Into<String>) -> Self {
        CheckResult {
            pass: false,
            counterexample,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub congruence: CheckResult,
    pub area: CheckResult,
    pub overlap: CheckResult,
    pub containment: CheckResult,
}

impl Checks {
    pub fn all_pass(&self) -> bool {
        self.congruence.pass && self.area.pass && self.overlap.pass && self.containment.pass
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub n_tiles: usize,
    pub checks: Checks,
    pub is_square_count: bool,
}

/// Certifies a tiling: congruent tiles, equal total area, pairwise disjoint
/// interiors and containment in the outer triangle.
pub fn verify(t: &Tiling) -> VerifyReport {
    let n = t.tiles.len();
    let is_square_count = is_perfect_square(n as u64).is_some();
    let checks = match structural_defect(t) {
        Some(bad) => {
            let skipped = || CheckResult::fail(None, "not evaluated: malformed tiling");
            Checks {
                congruence: bad,
                area: skipped(),
                overlap: skipped(),
                containment: skipped(),
            }
        }
        None => Checks {
            congruence: congruence_check(t),
            area: area_check(t),
            overlap: overlap_check(t),
            containment: containment_check(t),
        },
    };
    VerifyReport {
        valid: checks.all_pass(),
        n_tiles: n,
        checks,
        is_square_count,
    }
}

fn structural_defect(t: &Tiling) -> Option<CheckResult> {
    if let Err(e) = t.check_structure() {
        let idx = t
            .tiles
            .iter()
            .position(|tile| tile.v.iter().any(|p| !p.fits_disc(t.disc)));
        return Some(CheckResult::fail(idx.map(|i| vec![i]), e.to_string()));
    }
    if t.outer_tile().orientation() == 0 {
        return Some(CheckResult::fail(None, "outer triangle is degenerate"));
    }
    if let Some(i) = t.tiles.iter().position(|tile| tile.orientation() == 0) {
        return Some(CheckResult::fail(
            Some(vec![i]),
            format!("tile {i} is degenerate"),
        ));
    }
    None
}

fn congruence_check(t: &Tiling) -> CheckResult {
    match t
        .tiles
        .iter()
        .position(|tile| !tile_congruent(tile, &t.tile_sides))
    {
        None => CheckResult::ok(),
        Some(i) => CheckResult::fail(
            Some(vec![i]),
            format!("tile {i} is not congruent to the tile"),
        ),
    }
}

fn area_check(t: &Tiling) -> CheckResult {
    let total = t
        .tiles
        .iter()
        .fold(QuadVal::zero(), |acc, tile| acc + tile.area2().abs());
    let outer = t.outer_tile().area2().abs();
    if total == outer {
        CheckResult::ok()
    } else {
        CheckResult::fail(
            None,
            format!(
                "tile areas sum to {} but the outer area is {}",
                total.scale(&Rational::frac(1, 2)),
                outer.scale(&Rational::frac(1, 2))
            ),
        )
    }
}

fn containment_check(t: &Tiling) -> CheckResult {
    let outer = t.outer_tile();
    match t
        .tiles
        .iter()
        .position(|tile| !tile.v.iter().all(|p| outer.contains(p)))
    {
        None => CheckResult::ok(),
        Some(i) => CheckResult::fail(Some(vec![i]), format!("tile {i} leaves the outer triangle")),
    }
}

struct Bounds {
    xmin: QuadVal,
    xmax: QuadVal,
    ymin: QuadVal,
    ymax: QuadVal,
}

fn exact_cmp(a: &QuadVal, b: &QuadVal) -> Ordering {
    a.cmp_exact(b).expect("shared discriminant")
}

fn bounds(tile: &PlacedTile) -> Bounds {
    let pick = |f: fn(&Point2) -> &QuadVal, want: Ordering| {
        tile.v
            .iter()
            .map(f)
            .reduce(|a, b| if exact_cmp(b, a) == want { b } else { a })
            .unwrap()
            .clone()
    };
    Bounds {
        xmin: pick(|p| &p.x, Ordering::Less),
        xmax: pick(|p| &p.x, Ordering::Greater),
        ymin: pick(|p| &p.y, Ordering::Less),
        ymax: pick(|p| &p.y, Ordering::Greater),
    }
}

/// Sweep over tiles sorted by exact `xmin`; the reported pair is the
/// lexicographically smallest overlapping pair of original indices.
fn overlap_check(t: &Tiling) -> CheckResult {
    let boxes: Vec<Bounds> = t.tiles.par_iter().map(bounds).collect();
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&i, &j| exact_cmp(&boxes[i].xmin, &boxes[j].xmin).then(i.cmp(&j)));
    let worst = order
        .par_iter()
        .enumerate()
        .filter_map(|(pos, &i)| {
            let bi = &boxes[i];
            let mut best: Option<(usize, usize)> = None;
            for &j in &order[pos + 1..] {
                let bj = &boxes[j];
                if exact_cmp(&bj.xmin, &bi.xmax) != Ordering::Less {
                    break;
                }
                if exact_cmp(&bj.ymin, &bi.ymax) != Ordering::Less
                    || exact_cmp(&bi.ymin, &bj.ymax) != Ordering::Less
                {
                    continue;
                }
                if interiors_intersect(&t.tiles[i], &t.tiles[j]).unwrap_or(true) {
                    let pair = (i.min(j), i.max(j));
                    best = Some(best.map_or(pair, |b| b.min(pair)));
                }
            }
            best
        })
        .min();
    match worst {
        None => CheckResult::ok(),
        Some((i, j)) => CheckResult::fail(
            Some(vec![i, j]),
            format!("tiles {i} and {j} have overlapping interiors"),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::SideLength;

    fn tri(p: [(i64, i64); 3]) -> PlacedTile {
        PlacedTile::new(
            Point2::ints(p[0].0, p[0].1),
            Point2::ints(p[1].0, p[1].1),
            Point2::ints(p[2].0, p[2].1),
        )
        .unwrap()
    }

    fn square_of_two() -> Tiling {
        // right isosceles triangle of legs 2 cut into 4 of legs 1
        let sides = [1, 1, 2].map(|s| SideLength::from_square(s.into()).unwrap());
        Tiling::new(
            1,
            sides,
            [Point2::ints(0, 0), Point2::ints(2, 0), Point2::ints(0, 2)],
            vec![
                tri([(0, 0), (1, 0), (0, 1)]),
                tri([(1, 0), (2, 0), (1, 1)]),
                tri([(0, 1), (1, 1), (0, 2)]),
                tri([(1, 0), (1, 1), (0, 1)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn valid_four_tiling() {
        let r = verify(&square_of_two());
        assert!(r.valid, "{r:?}");
        assert_eq!(r.n_tiles, 4);
        assert!(r.is_square_count);
    }

    #[test]
    fn duplicate_and_delete() {
        let mut t = square_of_two();
        t.tiles.push(t.tiles[2].clone());
        let r = verify(&t);
        assert!(!r.checks.overlap.pass);
        assert_eq!(r.checks.overlap.counterexample, Some(vec![2, 4]));
        let mut t = square_of_two();
        t.tiles.remove(1);
        let r = verify(&t);
        assert!(!r.checks.area.pass);
        assert!(!r.valid);
    }

    #[test]
    fn outside_tile() {
        let mut t = square_of_two();
        t.tiles[3] = tri([(1, 1), (2, 1), (1, 2)]);
        let r = verify(&t);
        assert!(!r.checks.containment.pass);
        assert_eq!(r.checks.containment.counterexample, Some(vec![3]));
    }
}
