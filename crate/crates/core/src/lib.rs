//! Exact tools for congruent triangle tilings.
//!
//! * [`kernel`]: big rationals and real quadratic fields `Q(sqrt D)`.
//! * [`numtheory`]: elliptic curve group law, torsion, bounded point search and
//!   the non-square predicates behind the tile-count arguments.
//! * [`classify`]: decides whether a triangle admits a tiling by congruent
//!   triangles whose count is not a perfect square, with exact witnesses.
//! * [`geometry`]: tiling data model and a bit-exact verifier.
//! * [`construct`]: explicit tilings and tile-count certificates.
//! * [`io`]: the `.tiling.json` format and SVG rendering.

pub mod classify;
pub mod construct;
pub mod error;
pub mod geometry;
pub mod io;
pub mod kernel;
pub mod numtheory;

pub use classify::{classify, FamilyTag, TriangleSpec, Verdict};
pub use error::{Error, Result};
pub use geometry::{verify, PlacedTile, Point2, Tiling, VerifyReport};
pub use kernel::{QuadVal, Rational, SideLength};
pub use numtheory::{ECPoint, EllipticCurve};
