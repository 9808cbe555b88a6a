//! Exact tiling data model and verifier.

mod point;
mod tile;
mod verify;

pub use point::{orient, Point2, Vec2};
pub use tile::{interiors_intersect, squared_side_lengths, tile_congruent, PlacedTile};
pub use verify::{verify, CheckResult, Checks, VerifyReport};

use crate::error::{Error, Result};
use crate::kernel::{is_squarefree, QuadVal, SideLength};

/// A triangle `outer` cut into copies of the tile with sides `tile_sides`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    /// Squarefree `D`; every coordinate lies in Q(sqrt D).
    pub disc: u64,
    /// Ascending.
    pub tile_sides: [SideLength; 3],
    pub outer: [Point2; 3],
    pub tiles: Vec<PlacedTile>,
}

impl Tiling {
    /// Checks the structural invariants; geometry is left to [`verify`].
    pub fn new(
        disc: u64,
        tile_sides: [SideLength; 3],
        outer: [Point2; 3],
        tiles: Vec<PlacedTile>,
    ) -> Result<Self> {
        let t = Tiling {
            disc,
            tile_sides,
            outer,
            tiles,
        };
        t.check_structure()?;
        Ok(t)
    }

    pub fn check_structure(&self) -> Result<()> {
        if self.disc == 0 || (self.disc > 1 && !is_squarefree(self.disc)) {
            return Err(Error::NotSquarefree(self.disc));
        }
        if !(self.tile_sides[0] <= self.tile_sides[1] && self.tile_sides[1] <= self.tile_sides[2]) {
            return Err(Error::InvalidInput(
                "tile sides must be sorted ascending".into(),
            ));
        }
        if self.tiles.is_empty() {
            return Err(Error::InvalidInput(
                "a tiling needs at least one tile".into(),
            ));
        }
        let points = self
            .outer
            .iter()
            .chain(self.tiles.iter().flat_map(|t| t.v.iter()));
        for p in points {
            if !p.fits_disc(self.disc) {
                return Err(Error::MixedDiscriminant(self.disc, p.disc()));
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn outer_tile(&self) -> PlacedTile {
        PlacedTile::unchecked(self.outer.clone())
    }

    pub fn map_points(&self, f: impl Fn(&Point2) -> Point2) -> Tiling {
        Tiling {
            disc: self.disc,
            tile_sides: self.tile_sides.clone(),
            outer: [f(&self.outer[0]), f(&self.outer[1]), f(&self.outer[2])],
            tiles: self.tiles.iter().map(|t| t.map(&f)).collect(),
        }
    }

    pub fn translate(&self, dx: &QuadVal, dy: &QuadVal) -> Tiling {
        self.map_points(|p| p.translate(dx, dy))
    }

    pub fn reflect_x(&self) -> Tiling {
        self.map_points(Point2::reflect_x)
    }
}

/// Sorts three side lengths ascending.
pub fn sorted_sides(mut s: [SideLength; 3]) -> [SideLength; 3] {
    s.sort();
    s
}
