//! Command-line front end for `tritile`.
//!
//! [`run`] parses arguments, writes reports to `out` and diagnostics to `err`
//! and returns the process exit code:
//! 0 success, 1 invalid tiling, 2 usage or input error, 3 internal error.

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use tritile::construct::{
    biquadratic_tiling, bisect_isosceles, count_case4, count_case5, count_case6, count_case8,
    glue_append_similar, hexagonal_tiling, outer_from_sides, quadratic_tiling, tri_306090_tiling,
    triquadratic_params, CountCertificate,
};
use tritile::io::{parse_tiling, render_svg, serialize_tiling, SvgOptions};
use tritile::numtheory::{rational_point_search, torsion_points};
use tritile::{
    classify, verify, EllipticCurve, FamilyTag, Rational, SideLength, Tiling, TriangleSpec,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "tritile",
    version,
    about = "Exact tools for congruent triangle tilings"
)]
pub struct Cli {
    /// Print only the verdict line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide which non-square tiling conditions a triangle satisfies.
    Classify(ClassifyArgs),
    /// Build a tiling and write it as `.tiling.json`.
    Construct(ConstructArgs),
    /// Check a tiling file exactly.
    Verify { file: PathBuf },
    /// Draw a tiling file as SVG.
    Render(RenderArgs),
    /// Tile-count certificate for cases 4 to 8.
    Count(CountArgs),
    /// Elliptic curve utilities.
    Curve {
        #[command(subcommand)]
        command: CurveCommand,
    },
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    /// Angles as multiples of pi, e.g. `1/6,1/2,1/3`.
    #[arg(long, conflicts_with_all = ["sides", "family"])]
    angles_pi: Option<String>,
    /// Side lengths such as `3,4,5` or `1,2,sqrt(5)`.
    #[arg(long, conflicts_with = "family")]
    sides: Option<String>,
    /// One of C60, B2A_TAN, B2A_SIN, HALF_SUM, TWO_PLUS_HALF.
    #[arg(long, requires = "params")]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Quadratic,
    Bisect,
    Hexagonal,
    Biquadratic,
    Tri306090,
    Glue,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Subdivision of the quadratic tiling.
    #[arg(long)]
    n: Option<u32>,
    /// Hexagonal or 30-60-90 family index.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long = "M")]
    m: Option<u32>,
    #[arg(long = "K")]
    big_k: Option<u32>,
    /// Sides of the outer triangle of a quadratic tiling.
    #[arg(long)]
    sides: Option<String>,
    /// Base of the isosceles triangle to bisect.
    #[arg(long)]
    base_length: Option<String>,
    /// Height of the isosceles triangle, e.g. `5` or `sqrt(3)`.
    #[arg(long)]
    height: Option<String>,
    /// Tiling file to extend when gluing.
    #[arg(long)]
    base: Option<PathBuf>,
    /// Outer side (0, 1 or 2) to glue onto.
    #[arg(long)]
    side: Option<usize>,
    /// Tile side (0, 1 or 2, ascending order) placed along the glued side.
    #[arg(long)]
    tile_side: Option<usize>,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    /// Skip the exact verification of the result.
    #[arg(long)]
    skip_verify: bool,
}

#[derive(Args, Debug)]
struct RenderArgs {
    file: PathBuf,
    #[arg(short = 'o', long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 800)]
    width: u32,
    #[arg(long, default_value_t = 9)]
    precision: usize,
    #[arg(long)]
    skip_verify: bool,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[arg(long = "case", value_parser = clap::value_parser!(u8).range(4..=8))]
    case_id: u8,
    /// Case 4: the tile sides `a,b`.
    #[arg(long)]
    params: Option<String>,
    /// Case 4 scale factor.
    #[arg(long)]
    m: Option<u64>,
    #[arg(long = "M")]
    big_m: Option<u64>,
    #[arg(long = "K")]
    big_k: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CurveCommand {
    /// Rational torsion points of `y^2 = x^3 + a2 x^2 + a1 x + a0`.
    Torsion {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Rational points with `x = u/v`, `|u|, v <= height`.
    Search {
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long, default_value_t = 100)]
        height: u64,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Display) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.to_string(),
        }
    }
}

impl From<tritile::Error> for Failure {
    fn from(e: tritile::Error) -> Self {
        Failure::usage(e)
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the command line `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let mut buf = Vec::new();
    let result = catch_unwind(AssertUnwindSafe(|| dispatch(&cli, &mut buf)));
    let _ = out.write_all(&buf);
    match result {
        Ok(Ok(code)) => code,
        Ok(Err(f)) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>) -> CmdResult {
    let q = cli.quiet;
    match &cli.command {
        Command::Classify(a) => cmd_classify(a, q, out),
        Command::Construct(a) => cmd_construct(a, q, out),
        Command::Verify { file } => cmd_verify(file, q, out),
        Command::Render(a) => cmd_render(a, q, out),
        Command::Count(a) => cmd_count(a, q, out),
        Command::Curve { command } => cmd_curve(command, q, out),
    }
}

fn emit(out: &mut Vec<u8>, v: &impl serde::Serialize) {
    let text = serde_json::to_string_pretty(v).expect("serializable report");
    writeln!(out, "{text}").unwrap();
}

fn parse_list<T: FromStr>(flag: &str, s: &str) -> Result<Vec<T>, Failure>
where
    T::Err: Display,
{
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<T>()
                .map_err(|e| Failure::usage(format!("--{flag}: `{}`: {e}", p.trim())))
        })
        .collect()
}

fn parse_three<T: FromStr>(flag: &str, s: &str) -> Result<[T; 3], Failure>
where
    T::Err: Display,
{
    let v: Vec<T> = parse_list(flag, s)?;
    <[T; 3]>::try_from(v)
        .map_err(|v| Failure::usage(format!("--{flag} takes 3 values, got {}", v.len())))
}

fn parse_one<T: FromStr>(flag: &str, s: &str) -> Result<T, Failure>
where
    T::Err: Display,
{
    s.trim()
        .parse()
        .map_err(|e| Failure::usage(format!("--{flag}: `{s}`: {e}")))
}

fn need<T: Clone>(flag: &str, v: &Option<T>) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure::usage(format!("missing --{flag}")))
}

fn cmd_classify(a: &ClassifyArgs, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    let spec = if let Some(s) = &a.angles_pi {
        let [x, y, z] = parse_three::<Rational>("angles-pi", s)?;
        TriangleSpec::angles_pi(x, y, z)
    } else if let Some(s) = &a.sides {
        TriangleSpec::Sides(parse_three::<SideLength>("sides", s)?)
    } else if let Some(f) = &a.family {
        let tag: FamilyTag = parse_one("family", f)?;
        let params = parse_list::<Rational>("params", a.params.as_deref().unwrap_or_default())?;
        TriangleSpec::family(tag, params)
    } else {
        return Err(Failure::usage(
            "one of --angles-pi, --sides or --family is required",
        ));
    };
    let verdict = classify(&spec)?;
    if quiet {
        let ids: Vec<String> = verdict.condition_ids().iter().map(u8::to_string).collect();
        writeln!(
            out,
            "admits_nonsquare={} conditions=[{}]",
            verdict.admits_nonsquare,
            ids.join(",")
        )
        .unwrap();
    } else {
        emit(out, &verdict);
    }
    Ok(EXIT_OK)
}

fn read_tiling(path: &Path) -> Result<Tiling, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse_tiling(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn build(a: &ConstructArgs) -> Result<Tiling, Failure> {
    Ok(match a.kind {
        Kind::Quadratic => {
            let [x, y, z] = parse_three::<SideLength>("sides", &need("sides", &a.sides)?)?;
            quadratic_tiling(outer_from_sides(&x, &y, &z)?, need("n", &a.n)?)?
        }
        Kind::Bisect => {
            let base: Rational = parse_one("base-length", &need("base-length", &a.base_length)?)?;
            let height: SideLength = parse_one("height", &need("height", &a.height)?)?;
            bisect_isosceles(&base, &height)?
        }
        Kind::Hexagonal => hexagonal_tiling(need("k", &a.k)?)?,
        Kind::Biquadratic => biquadratic_tiling(need("M", &a.m)?, need("K", &a.big_k)?)?,
        Kind::Tri306090 => tri_306090_tiling(need("k", &a.k)?)?,
        Kind::Glue => {
            let base = read_tiling(&need("base", &a.base)?)?;
            glue_append_similar(&base, need("side", &a.side)?, a.tile_side)?
        }
    })
}

fn cmd_construct(a: &ConstructArgs, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    let tiling = build(a)?;
    let report = (!a.skip_verify).then(|| verify(&tiling));
    let valid = report.as_ref().is_none_or(|r| r.valid);
    let text = serialize_tiling(&tiling);
    match &a.output {
        Some(path) => {
            write_file(path, &text)?;
            if quiet {
                writeln!(out, "wrote {} ({} tiles)", path.display(), tiling.len()).unwrap();
            } else {
                emit(
                    out,
                    &json!({
                        "output": path.display().to_string(),
                        "n_tiles": tiling.len(),
                        "verify": report,
                    }),
                );
            }
        }
        None => out.extend_from_slice(text.as_bytes()),
    }
    Ok(if valid { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_verify(file: &Path, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    let tiling = read_tiling(file)?;
    let report = verify(&tiling);
    if quiet {
        let word = if report.valid { "valid" } else { "invalid" };
        writeln!(out, "{word} n={}", report.n_tiles).unwrap();
    } else {
        emit(out, &report);
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_INVALID })
}

fn cmd_render(a: &RenderArgs, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    let tiling = read_tiling(&a.file)?;
    if !a.skip_verify {
        let report = verify(&tiling);
        if !report.valid {
            if !quiet {
                emit(out, &report);
            }
            return Ok(EXIT_INVALID);
        }
    }
    let opts = SvgOptions {
        width_px: a.width,
        precision: a.precision,
        ..SvgOptions::default()
    };
    let svg = render_svg(&tiling, &opts);
    match &a.output {
        Some(path) => {
            write_file(path, &svg)?;
            if quiet {
                writeln!(out, "wrote {}", path.display()).unwrap();
            } else {
                emit(
                    out,
                    &json!({"output": path.display().to_string(), "polygons": tiling.len()}),
                );
            }
        }
        None => out.extend_from_slice(svg.as_bytes()),
    }
    Ok(EXIT_OK)
}

fn cmd_count(a: &CountArgs, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    let t = || -> Result<Rational, Failure> { parse_one("t", &need("t", &a.t)?) };
    let cert: CountCertificate = match a.case_id {
        4 => {
            let ab: Vec<u64> = parse_list("params", &need("params", &a.params)?)?;
            let [x, y] = <[u64; 2]>::try_from(ab)
                .map_err(|_| Failure::usage("--params takes a,b for case 4"))?;
            count_case4(x, y, a.m.unwrap_or(1))?
        }
        5 => count_case5(&t()?)?,
        6 => {
            let s: Rational = parse_one("s", &need("s", &a.s)?)?;
            count_case6(need("M", &a.big_m)?, &s)?
        }
        7 => triquadratic_params(need("M", &a.big_m)?, need("K", &a.big_k)?)?,
        _ => count_case8(&t()?)?,
    };
    if quiet {
        writeln!(
            out,
            "N={} is_square_possible={}",
            cert.n_expression, cert.is_square_possible
        )
        .unwrap();
    } else {
        emit(out, &cert);
    }
    Ok(EXIT_OK)
}

fn curve_from(coeffs: &str) -> Result<EllipticCurve, Failure> {
    let [a2, a1, a0] = parse_three::<i64>("coeffs", coeffs)?;
    Ok(EllipticCurve::new(a2, a1, a0)?)
}

fn cmd_curve(c: &CurveCommand, quiet: bool, out: &mut Vec<u8>) -> CmdResult {
    match c {
        CurveCommand::Torsion { coeffs } => {
            let group = torsion_points(&curve_from(coeffs)?)?;
            if quiet {
                writeln!(out, "{} ({} points)", group.structure, group.points.len()).unwrap();
            } else {
                emit(
                    out,
                    &json!({
                        "curve": group.curve.to_string(),
                        "points": group.points,
                        "structure": group.structure.to_string(),
                        "evidence_height": null,
                    }),
                );
            }
        }
        CurveCommand::Search { coeffs, height } => {
            let curve = curve_from(coeffs)?;
            let group = torsion_points(&curve)?;
            let points = rational_point_search(&curve, *height)?;
            let torsion = group.point_list();
            let beyond: Vec<_> = points.iter().filter(|p| !torsion.contains(p)).collect();
            if quiet {
                writeln!(
                    out,
                    "{} affine points, {} beyond torsion",
                    points.len(),
                    beyond.len()
                )
                .unwrap();
            } else {
                emit(
                    out,
                    &json!({
                        "curve": curve.to_string(),
                        "points": points,
                        "structure": group.structure.to_string(),
                        "evidence_height": height,
                        "beyond_torsion": beyond,
                    }),
                );
            }
        }
    }
    Ok(EXIT_OK)
}
