use num_bigint::BigInt;

use super::tilings::{common_disc, quadratic_tiles};
use crate::error::{Error, Result};
use crate::geometry::{orient, Point2, Tiling};
use crate::kernel::{quad_sign, rat_is_square, QuadVal, Rational};

/// Pastes an `n`-fold subdivided copy of the tile, scaled by `n`, along outer
/// side `outer_side` (from `outer[i]` to `outer[i+1]`) so that the union is a
/// larger triangle.
///
/// `tile_side` picks which tile side, scaled by `n`, lies on the outer side;
/// with `None` every side is tried in order.
pub fn glue_append_similar(
    base: &Tiling,
    outer_side: usize,
    tile_side: Option<usize>,
) -> Result<Tiling> {
    if outer_side > 2 {
        return Err(Error::OutOfRange(format!(
            "outer side {outer_side} is not 0, 1 or 2"
        )));
    }
    if matches!(tile_side, Some(e) if e > 2) {
        return Err(Error::OutOfRange("tile side must be 0, 1 or 2".into()));
    }
    let p = &base.outer[outer_side];
    let q = &base.outer[(outer_side + 1) % 3];
    let r = &base.outer[(outer_side + 2) % 3];
    let pq = q.sub(p);
    let l2 = pq
        .norm_sq()
        .as_rational()
        .cloned()
        .ok_or_else(|| Error::InvalidInput("outer side has an irrational square".into()))?;
    let sq = base.tile_sides.clone().map(|s| s.squared().clone());
    let two = Rational::from(2);
    // 16 K^2 of the tile
    let k16 = &two * &(&sq[0] * &sq[1] + &sq[1] * &sq[2] + &sq[2] * &sq[0])
        - (sq[0].square() + sq[1].square() + sq[2].square());
    let o = orient(p, q, r);
    let candidates: Vec<usize> = match tile_side {
        Some(e) => vec![e],
        None => vec![0, 1, 2],
    };
    for e in candidates {
        let Some(n) = rat_is_square(&(&l2 / &sq[e])).filter(Rational::is_integer) else {
            continue;
        };
        let n2 = n.square();
        let (f, g) = ((e + 1) % 3, (e + 2) % 3);
        for (f, g) in [(f, g), (g, f)] {
            // |PX| = n f, |QX| = n g
            let alpha = (&l2 + &(&n2 * &sq[f]) - &n2 * &sq[g]) / (&two * &l2);
            let Ok(beta) = QuadVal::sqrt_of(&(n2.square() * &k16 / (&two * &l2).square()))
                .map(|b| if o > 0 { -b } else { b })
            else {
                continue;
            };
            let jp = pq.perp();
            let (Ok(bx), Ok(by)) = (jp.x.try_mul(&beta), jp.y.try_mul(&beta)) else {
                continue;
            };
            let along = pq.scale(&alpha);
            let xx = p.x.try_add(&along.x).and_then(|v| v.try_add(&bx));
            let xy = p.y.try_add(&along.y).and_then(|v| v.try_add(&by));
            let Ok(x) = xx.and_then(|xx| Point2::new(xx, xy?)) else {
                continue;
            };
            let outer = if straight(r, p, &x) {
                [r.clone(), x.clone(), q.clone()]
            } else if straight(r, q, &x) {
                [r.clone(), p.clone(), x.clone()]
            } else {
                continue;
            };
            let n_int = n
                .to_integer()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| Error::OutOfRange(format!("subdivision {n} is too large")))?;
            let added = quadratic_tiles(&[p.clone(), q.clone(), x], n_int);
            let disc = common_disc(outer.iter().chain(added.iter().flat_map(|t| t.v.iter())))?;
            let disc = if base.disc != 1 { base.disc } else { disc };
            let mut tiles = base.tiles.clone();
            tiles.extend(added);
            return Tiling::new(disc, base.tile_sides.clone(), outer, tiles);
        }
    }
    Err(Error::NoGlueOrientation)
}

/// `b` lies strictly between `a` and `c` on one line.
fn straight(a: &Point2, b: &Point2, c: &Point2) -> bool {
    orient(a, b, c) == 0 && quad_sign(&b.sub(a).dot(&c.sub(b))) > 0
}

/// Tile count after gluing onto a side of length `l` with tile side `e`:
/// `n_base + (l/e)^2`, which needs `l/e` to be a positive integer.
pub fn glue_count(n_base: u64, l: &Rational, e: &Rational) -> Result<BigInt> {
    let ratio = l.checked_div(e)?;
    match ratio.to_integer() {
        Some(n) if ratio.is_positive() => Ok(BigInt::from(n_base) + &n * &n),
        _ => Err(Error::InvalidInput(format!(
            "{l}/{e} = {ratio} is not a positive integer"
        ))),
    }
}

/// Every tile side admitting a glue along a side of length `l`, with the
/// resulting count.
pub fn glue_counts(n_base: u64, l: &Rational, sides: &[Rational]) -> Vec<(Rational, BigInt)> {
    sides
        .iter()
        .filter_map(|e| glue_count(n_base, l, e).ok().map(|n| (e.clone(), n)))
        .collect()
}
