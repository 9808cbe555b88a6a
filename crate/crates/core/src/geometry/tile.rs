use std::cmp::Ordering;

use super::point::{orient, Point2};
use crate::error::{Error, Result};
use crate::kernel::{QuadVal, Rational, SideLength};

/// A triangle placed in the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlacedTile {
    pub v: [Point2; 3],
}

impl PlacedTile {
    /// Rejects collinear vertices and coordinates from different fields.
    pub fn new(v0: Point2, v1: Point2, v2: Point2) -> Result<Self> {
        let d = [&v0, &v1, &v2].iter().map(|p| p.disc()).max().unwrap();
        if let Some(p) = [&v0, &v1, &v2].into_iter().find(|p| !p.fits_disc(d)) {
            return Err(Error::MixedDiscriminant(d, p.disc()));
        }
        let t = PlacedTile { v: [v0, v1, v2] };
        if t.orientation() == 0 {
            return Err(Error::DegenerateTriangle(format!(
                "collinear vertices {:?}",
                t.v
            )));
        }
        Ok(t)
    }

    /// Builds without checks; the verifier reports any defect.
    pub fn unchecked(v: [Point2; 3]) -> Self {
        PlacedTile { v }
    }

    pub fn disc(&self) -> u64 {
        self.v.iter().map(Point2::disc).max().unwrap()
    }

    pub fn orientation(&self) -> i32 {
        orient(&self.v[0], &self.v[1], &self.v[2])
    }

    /// Twice the signed area.
    pub fn area2(&self) -> QuadVal {
        self.v[1].sub(&self.v[0]).cross(&self.v[2].sub(&self.v[0]))
    }

    /// Same triangle with vertices cycled or swapped.
    pub fn relabeled(&self, perm: [usize; 3]) -> PlacedTile {
        PlacedTile {
            v: perm.map(|i| self.v[i].clone()),
        }
    }

    pub fn map(&self, f: impl Fn(&Point2) -> Point2) -> PlacedTile {
        PlacedTile {
            v: [f(&self.v[0]), f(&self.v[1]), f(&self.v[2])],
        }
    }

    /// Strictly inside.
    pub fn strictly_inside(&self, p: &Point2) -> bool {
        let o = self.orientation();
        (0..3).all(|i| orient(&self.v[i], &self.v[(i + 1) % 3], p) == o)
    }

    /// Inside or on the boundary.
    pub fn contains(&self, p: &Point2) -> bool {
        let o = self.orientation();
        (0..3).all(|i| orient(&self.v[i], &self.v[(i + 1) % 3], p) * o >= 0)
    }
}

/// The three squared side lengths, sorted ascending.
pub fn squared_side_lengths(t: &PlacedTile) -> [QuadVal; 3] {
    let mut s = [0, 1, 2].map(|i| t.v[(i + 1) % 3].sub(&t.v[i]).norm_sq());
    s.sort_by(|a, b| a.cmp_exact(b).unwrap_or(Ordering::Equal));
    s
}

/// SSS congruence, mirror images included.
pub fn tile_congruent(t: &PlacedTile, sides: &[SideLength; 3]) -> bool {
    if t.orientation() == 0 {
        return false;
    }
    let got = squared_side_lengths(t);
    let mut want: Vec<&Rational> = sides.iter().map(|s| s.squared()).collect();
    want.sort();
    got.iter()
        .zip(want)
        .all(|(g, w)| g.as_rational() == Some(w))
}

/// Whether the open interiors of two non-degenerate triangles meet.
///
/// Two triangles have disjoint interiors exactly when some edge of one has
/// every vertex of the other on its closed outer side.
pub fn interiors_intersect(t1: &PlacedTile, t2: &PlacedTile) -> Result<bool> {
    let (d1, d2) = (t1.disc(), t2.disc());
    if d1 != d2 && d1 != 1 && d2 != 1 {
        return Err(Error::MixedDiscriminant(d1, d2));
    }
    Ok(!(separated_by_edge(t1, t2) || separated_by_edge(t2, t1)))
}

fn separated_by_edge(a: &PlacedTile, b: &PlacedTile) -> bool {
    let o = a.orientation();
    (0..3).any(|i| {
        let (p, q) = (&a.v[i], &a.v[(i + 1) % 3]);
        b.v.iter().all(|x| orient(p, q, x) * o <= 0)
    })
}
