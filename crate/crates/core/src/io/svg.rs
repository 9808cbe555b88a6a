use std::fmt::Write;

use crate::geometry::{Point2, Tiling};

/// Rendering options. Coordinates in the picture are decimal approximations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgOptions {
    pub width_px: u32,
    /// Significant digits of each coordinate.
    pub precision: usize,
    pub margin_px: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width_px: 800,
            precision: 9,
            margin_px: 10,
        }
    }
}

/// `v` with `digits` significant digits, trailing zeros removed.
pub fn format_sig(v: f64, digits: usize) -> String {
    if v == 0.0 || !v.is_finite() {
        return "0".into();
    }
    let mag = v.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - mag).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

/// One `<polygon>` per tile plus an outline `<path>` of the outer triangle.
pub fn render_svg(t: &Tiling, opts: &SvgOptions) -> String {
    let outer: Vec<(f64, f64)> = t.outer.iter().map(Point2::to_f64).collect();
    let fold = |f: fn(f64, f64) -> f64, pick: fn(&(f64, f64)) -> f64, init: f64| {
        outer.iter().map(pick).fold(init, f)
    };
    let (xmin, xmax) = (
        fold(f64::min, |p| p.0, f64::INFINITY),
        fold(f64::max, |p| p.0, f64::NEG_INFINITY),
    );
    let (ymin, ymax) = (
        fold(f64::min, |p| p.1, f64::INFINITY),
        fold(f64::max, |p| p.1, f64::NEG_INFINITY),
    );
    let margin = opts.margin_px as f64;
    let inner = (opts.width_px as f64 - 2.0 * margin).max(1.0);
    let scale = inner / (xmax - xmin).max(f64::MIN_POSITIVE);
    let height = ((ymax - ymin) * scale + 2.0 * margin).ceil() as u64;
    let fmt = |v: f64| format_sig(v, opts.precision);
    let map = |p: &Point2| {
        let (x, y) = p.to_f64();
        (
            fmt(margin + (x - xmin) * scale),
            fmt(margin + (ymax - y) * scale),
        )
    };

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{height}\" viewBox=\"0 0 {w} {height}\">",
        w = opts.width_px
    )
    .unwrap();
    out.push_str("<g stroke=\"#333\" stroke-width=\"0.5\" stroke-linejoin=\"round\">\n");
    for tile in &t.tiles {
        let fill = if tile.orientation() >= 0 {
            "#f3d9a4"
        } else {
            "#a9c8e8"
        };
        let pts: Vec<String> = tile
            .v
            .iter()
            .map(|p| {
                let (x, y) = map(p);
                format!("{x},{y}")
            })
            .collect();
        writeln!(
            out,
            "<polygon points=\"{}\" fill=\"{fill}\"/>",
            pts.join(" ")
        )
        .unwrap();
    }
    out.push_str("</g>\n");
    let d: Vec<String> = t
        .outer
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let (x, y) = map(p);
            format!("{}{x} {y}", if i == 0 { "M" } else { "L" })
        })
        .collect();
    writeln!(
        out,
        "<path d=\"{} Z\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>",
        d.join(" ")
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
