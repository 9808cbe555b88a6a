use std::fmt::Write;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::geometry::{sorted_sides, PlacedTile, Point2, Tiling};
use crate::kernel::{is_squarefree, QuadVal, Rational, SideLength};

/// Current version of the `.tiling.json` format.
pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FileRepr {
    version: u32,
    #[serde(rename = "D")]
    disc: u64,
    tile: TileRepr,
    outer: Vec<PointRepr>,
    tiles: Vec<Vec<PointRepr>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TileRepr {
    a: String,
    b: String,
    c: String,
}

/// `[[x_rat, x_surd], [y_rat, y_surd]]`
type PointRepr = [[String; 2]; 2];

fn json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Syntax | Category::Eof => Error::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
        _ => Error::Format(e.to_string()),
    }
}

fn coord(v: &[String; 2], disc: u64) -> Result<QuadVal> {
    let rat: Rational = v[0].parse()?;
    let surd: Rational = v[1].parse()?;
    QuadVal::new(rat, surd, disc)
}

fn point(p: &PointRepr, disc: u64) -> Result<Point2> {
    Point2::new(coord(&p[0], disc)?, coord(&p[1], disc)?)
}

fn triple(points: &[PointRepr], disc: u64, what: &str) -> Result<[Point2; 3]> {
    if points.len() != 3 {
        return Err(Error::Format(format!(
            "{what} has {} points, expected 3",
            points.len()
        )));
    }
    Ok([
        point(&points[0], disc)?,
        point(&points[1], disc)?,
        point(&points[2], disc)?,
    ])
}

/// Parses a `.tiling.json` document into an exact tiling.
///
/// Rationals are normalized and the tile sides sorted; the geometry is kept
/// as given so that [`crate::geometry::verify`] sees the file's claims.
pub fn parse_tiling(text: &str) -> Result<Tiling> {
    let f: FileRepr = serde_json::from_str(text).map_err(json_error)?;
    if f.version != FORMAT_VERSION {
        return Err(Error::Format(format!("unsupported version {}", f.version)));
    }
    if f.disc == 0 || (f.disc > 1 && !is_squarefree(f.disc)) {
        return Err(Error::NotSquarefree(f.disc));
    }
    let sides = [&f.tile.a, &f.tile.b, &f.tile.c].map(|s| s.parse::<SideLength>());
    let [a, b, c] = sides;
    let outer = triple(&f.outer, f.disc, "outer")?;
    let tiles = f
        .tiles
        .iter()
        .enumerate()
        .map(|(i, t)| triple(t, f.disc, &format!("tile {i}")).map(PlacedTile::unchecked))
        .collect::<Result<Vec<_>>>()?;
    Tiling::new(f.disc, sorted_sides([a?, b?, c?]), outer, tiles)
}

fn push_point(out: &mut String, p: &Point2) {
    let c = |q: &QuadVal| format!("[\"{}\", \"{}\"]", q.rat_part(), q.surd_part());
    write!(out, "[{}, {}]", c(&p.x), c(&p.y)).unwrap();
}

fn push_triple(out: &mut String, v: &[Point2; 3]) {
    out.push('[');
    for (i, p) in v.iter().enumerate() {
        if i > 0 {
            out.push_str(", ");
        }
        push_point(out, p);
    }
    out.push(']');
}

/// Canonical text: one tile per line, normalized rationals.
pub fn serialize_tiling(t: &Tiling) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"version\": {FORMAT_VERSION},").unwrap();
    writeln!(out, "  \"D\": {},", t.disc).unwrap();
    let [a, b, c] = &t.tile_sides;
    writeln!(
        out,
        "  \"tile\": {{\"a\": \"{a}\", \"b\": \"{b}\", \"c\": \"{c}\"}},"
    )
    .unwrap();
    out.push_str("  \"outer\": ");
    push_triple(&mut out, &t.outer);
    out.push_str(",\n  \"tiles\": [\n");
    for (i, tile) in t.tiles.iter().enumerate() {
        out.push_str("    ");
        push_triple(&mut out, &tile.v);
        out.push_str(if i + 1 < t.tiles.len() { ",\n" } else { "\n" });
    }
    out.push_str("  ]\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{hexagonal_tiling, quadratic_tiling};

    #[test]
    fn round_trip() {
        for t in [
            quadratic_tiling(
                [Point2::ints(0, 0), Point2::ints(4, 0), Point2::ints(1, 3)],
                2,
            )
            .unwrap(),
            hexagonal_tiling(1).unwrap(),
        ] {
            let s = serialize_tiling(&t);
            let back = parse_tiling(&s).unwrap();
            assert_eq!(back, t);
            assert_eq!(serialize_tiling(&back), s);
        }
    }

    const SMALL: &str = r#"{"version": 1, "D": DISC, "tile": {"a": "1", "b": "1", "c": "sqrt(2)"},
        "outer": [[["0","0"],["0","0"]], [["1","0"],["0","0"]], [["0","0"],["1","0"]]],
        "tiles": [[[["0","0"],["0","0"]], [["2/2","0"],["0","0"]], [["0","0"],["NUM","0"]]]]}"#;

    fn small(disc: &str, num: &str) -> String {
        SMALL.replace("DISC", disc).replace("NUM", num)
    }

    #[test]
    fn parses_and_normalizes() {
        let t = parse_tiling(&small("1", "-3/-3")).unwrap();
        assert_eq!(t.tiles[0].v[1], Point2::ints(1, 0));
        assert_eq!(t.tiles[0].v[2], Point2::ints(0, 1));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_tiling(&small("12", "1")).unwrap_err(),
            Error::NotSquarefree(12)
        );
        assert_eq!(
            parse_tiling(&small("1", "1/0")).unwrap_err(),
            Error::DivisionByZero
        );
        match parse_tiling("{\n  \"version\": 1,\n  \"D\": ]").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (3, 8)),
            e => panic!("{e:?}"),
        }
        assert!(matches!(
            parse_tiling(r#"{"version": 1}"#),
            Err(Error::Format(_))
        ));
    }
}
