use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;
use tritile_cli::{run, EXIT_INVALID, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn tritile(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["tritile".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn verify_fixture() {
    let (code, out, _) = tritile(&["verify", &fixture("quadratic_4.tiling.json")]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["n_tiles"], 4);
}

#[test]
fn every_fixture_verifies() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut n = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if !path.to_string_lossy().ends_with(".tiling.json") {
            continue;
        }
        let (code, out, _) = tritile(&["--quiet", "verify", path.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK, "{}", path.display());
        assert!(out.starts_with("valid n="));
        n += 1;
    }
    assert!(n >= 6);
}

#[test]
fn classify_sides() {
    let (code, out, _) = tritile(&["classify", "--sides", "3,4,5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["admits_nonsquare"], false);

    let (code, out, _) = tritile(&["--quiet", "classify", "--sides", "1,2,sqrt(5)"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "admits_nonsquare=true conditions=[2]");

    let (code, out, _) = tritile(&[
        "--quiet", "classify", "--family", "half_sum", "--params", "2,4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "admits_nonsquare=true conditions=[7]");

    let (code, out, _) = tritile(&["--quiet", "classify", "--angles-pi", "1/6,1/2,1/3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "admits_nonsquare=true conditions=[3]");
}

#[test]
fn torsion_list() {
    let (code, out, _) = tritile(&["curve", "torsion", "--coeffs", "2,-3,0"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 8);
    assert_eq!(v["structure"], "Z/2 x Z/4");
    for key in ["curve", "evidence_height"] {
        assert!(v.get(key).is_some(), "{key}");
    }

    let (_, out, _) = tritile(&["--quiet", "curve", "torsion", "--coeffs", "6,-3,0"]);
    assert_eq!(out.trim(), "Z/6 (6 points)");

    let (code, out, _) = tritile(&["curve", "search", "--coeffs", "2,-3,0", "--height", "100"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
    assert_eq!(v["beyond_torsion"].as_array().unwrap().len(), 0);
    assert_eq!(v["evidence_height"], 100);
}

#[test]
fn usage_errors() {
    let cases: [&[&str]; 7] = [
        &["classify"],
        &["classify", "--sides", "3,4"],
        &["classify", "--sides", "3,4,5", "--family", "c60"],
        &["count", "--case", "9", "--t", "1/5"],
        &["count", "--case", "5"],
        &["construct", "--kind", "hexagonal"],
        &["verify", "/nonexistent/file.tiling.json"],
    ];
    for args in cases {
        let (code, _, err) = tritile(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
    let (_, _, err) = tritile(&["count", "--case", "5"]);
    assert!(err.contains("--t"), "{err}");
}

#[test]
fn invalid_tiling_exits_one() {
    let text = std::fs::read_to_string(fixture("quadratic_4.tiling.json")).unwrap();
    // drop the last tile
    let mut lines: Vec<&str> = text.lines().collect();
    let last_tile = lines
        .iter()
        .rposition(|l| l.trim_start().starts_with("[[["))
        .unwrap();
    lines.remove(last_tile);
    let prev = lines[last_tile - 1].trim_end_matches(',').to_string();
    lines[last_tile - 1] = &prev;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.tiling.json");
    std::fs::write(&path, lines.join("\n")).unwrap();

    let (code, out, _) = tritile(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert_eq!(v["checks"]["area"]["pass"], false);

    let (code, out, _) = tritile(&["--quiet", "verify", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_INVALID);
    assert_eq!(out.trim(), "invalid n=3");
}

#[test]
fn render_polygon_count() {
    let dir = tempfile::tempdir().unwrap();
    for (name, n) in [
        ("hexagonal_27.tiling.json", 27),
        ("biquadratic_13.tiling.json", 13),
    ] {
        let svg = dir.path().join("out.svg");
        let (code, _, _) = tritile(&["render", &fixture(name), "-o", svg.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        let text = std::fs::read_to_string(&svg).unwrap();
        assert_eq!(text.matches("<polygon").count(), n, "{name}");
        assert_eq!(text.matches("<path").count(), 1);
    }
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let runs: [(&[&str], usize); 6] = [
        (&["--kind", "quadratic", "--sides", "3,4,5", "--n", "3"], 9),
        (&["--kind", "hexagonal", "--k", "2"], 27),
        (&["--kind", "biquadratic", "--M", "3", "--K", "2"], 13),
        (&["--kind", "tri306090", "--k", "2"], 12),
        (
            &[
                "--kind",
                "bisect",
                "--base-length",
                "2",
                "--height",
                "sqrt(3)",
            ],
            2,
        ),
        (&["--kind", "glue", "--base", "__BASE__", "--side", "2"], 8),
    ];
    let base = fixture("quadratic_4.tiling.json");
    for (i, (args, n)) in runs.iter().enumerate() {
        let file = dir.path().join(format!("{i}.tiling.json"));
        let mut argv = vec!["--quiet", "construct"];
        argv.extend(
            args.iter()
                .map(|a| if *a == "__BASE__" { base.as_str() } else { a }),
        );
        argv.extend(["-o", file.to_str().unwrap()]);
        let (code, out, err) = tritile(&argv);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        assert!(out.contains(&format!("({n} tiles)")), "{out}");
        let (code, out, _) = tritile(&["--quiet", "verify", file.to_str().unwrap()]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(out.trim(), format!("valid n={n}"));
    }
}

#[test]
fn count_reports() {
    let (code, out, _) = tritile(&["count", "--case", "6", "--M", "5", "--s", "1/2"]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["n_expression"], "77");
    assert_eq!(v["is_square_possible"], false);

    let (_, out, _) = tritile(&["--quiet", "count", "--case", "7", "--M", "5", "--K", "25"]);
    assert_eq!(out.trim(), "N=1225 is_square_possible=true");
    let (_, out, _) = tritile(&["--quiet", "count", "--case", "8", "--t", "1/5"]);
    assert_eq!(out.trim(), "N=13/8 is_square_possible=false");
    let (_, out, _) = tritile(&[
        "--quiet", "count", "--case", "4", "--params", "3,5", "--m", "1",
    ]);
    assert!(out.starts_with("N="), "{out}");
}

#[test]
fn output_is_byte_deterministic() {
    let hex = fixture("hexagonal_27.tiling.json");
    let commands: [&[&str]; 5] = [
        &["verify", &hex],
        &["render", &hex],
        &["construct", "--kind", "hexagonal", "--k", "3"],
        &["classify", "--family", "two_plus_half", "--params", "1/5"],
        &["curve", "search", "--coeffs", "6,-3,0", "--height", "60"],
    ];
    for args in commands {
        let first = tritile(args);
        assert_eq!(first.0, EXIT_OK);
        for _ in 0..3 {
            assert_eq!(tritile(args), first, "{args:?}");
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tritile");
    let status = Command::new(bin)
        .args(["verify", &fixture("quadratic_4.tiling.json")])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&status.stdout).contains("\"valid\": true"));

    let status = Command::new(bin)
        .args(["classify", "--bogus"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&status.stderr).contains("--bogus"));
}

#[test]
fn output_independent_of_thread_count() {
    let bin = env!("CARGO_BIN_EXE_tritile");
    let hex = fixture("hexagonal_27.tiling.json");
    let commands: [&[&str]; 3] = [
        &["verify", &hex],
        &["render", &hex],
        &["curve", "search", "--coeffs", "2,-3,0", "--height", "80"],
    ];
    for args in commands {
        let outputs: Vec<Vec<u8>> = ["1", "4"]
            .iter()
            .map(|threads| {
                Command::new(bin)
                    .args(args)
                    .env("RAYON_NUM_THREADS", threads)
                    .output()
                    .unwrap()
                    .stdout
            })
            .collect();
        assert_eq!(outputs[0], outputs[1], "{args:?}");
    }
}
