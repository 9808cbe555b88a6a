//! Tiling files and SVG output.

mod format;
mod svg;

pub use format::{parse_tiling, serialize_tiling, FORMAT_VERSION};
pub use svg::{format_sig, render_svg, SvgOptions};
