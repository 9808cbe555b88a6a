//! Tiling constructions and tile-count formulas.

mod counts;
mod glue;
mod tilings;

pub use counts::{
    count_case4, count_case5, count_case6, count_case8, triquadratic_params, CountCertificate,
};
pub use glue::{glue_append_similar, glue_count, glue_counts};
pub use tilings::{
    biquadratic_tiling, bisect_isosceles, hexagonal_tiling, outer_from_sides, quadratic_tiling,
    tri_306090_tiling,
};
