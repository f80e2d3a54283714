use std::f64::consts::TAU;
use std::path::Path;
use std::process::{Command, Output};

use equicenter::{Point, Shape};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicenter"))
        .args(args)
        .output()
        .unwrap()
}

fn ok(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn xy(v: &Value) -> [f64; 2] {
    [v["x"].as_f64().unwrap(), v["y"].as_f64().unwrap()]
}

/// Even-odd crossing test, independent of the library.
fn inside(poly: &[[f64; 2]], p: [f64; 2]) -> bool {
    let mut c = false;
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        if (a[1] > p[1]) != (b[1] > p[1]) && p[0] < a[0] + (p[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]) {
            c = !c;
        }
    }
    c
}

#[test]
fn ellipse_steiner_center_is_the_origin() {
    let v = ok(&[
        "center", "--shape", "ellipse", "--a", "2", "--b", "1", "--kind", "steiner",
    ]);
    assert_eq!(v["command"], "center");
    let p = xy(&v["result"]["point"]);
    assert!(p[0].hypot(p[1]) < 1e-9, "{p:?}");
    assert_eq!(v["result"]["retracted"], false);
}

#[test]
fn lune_file_center_is_strictly_interior() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lune.json");
    let samples: Vec<[f64; 2]> = Shape::LuneSmoothed
        .samples::<f64>(Point::origin(), 512)
        .iter()
        .map(|p| [p.x, p.y])
        .collect();
    std::fs::write(
        &path,
        serde_json::json!({ "samples": samples, "closed": true }).to_string(),
    )
    .unwrap();
    let v = ok(&["center", "--in", path.to_str().unwrap(), "--kind", "centroid"]);
    let r = &v["result"];
    assert!(r["clearance"].as_f64().unwrap() > 0.0);
    assert_eq!(r["retracted"], true);
    let dense: Vec<[f64; 2]> = Shape::LuneSmoothed
        .samples::<f64>(Point::origin(), 50_000)
        .iter()
        .map(|p| [p.x, p.y])
        .collect();
    assert!(inside(&dense, xy(&r["point"])));
    assert!(!inside(&dense, xy(&r["classical"])));
}

#[test]
fn round_flow_frames_are_identical_circles() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("flow.csv");
    let v = ok(&[
        "flow",
        "--shape",
        "circle",
        "--r",
        "1",
        "--frames",
        "8",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(v["result"]["frames"], 8);
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("frame_index,time,x,y"));
    let mut frames = std::collections::BTreeSet::new();
    for line in lines {
        let f: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        frames.insert(f[0] as usize);
        assert!((f[2].hypot(f[3]) - 1.0).abs() <= 1e-3, "{line}");
    }
    assert_eq!(frames.len(), 8);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn svg_flow_has_one_path_per_frame() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("flow.svg");
    ok(&[
        "flow",
        "--shape",
        "egg",
        "--frames",
        "6",
        "--out",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches("<path").count(), 6);
}

#[test]
fn verify_suites_pass() {
    for suite in ["convex-agreement", "reach", "interiority"] {
        let v = ok(&["verify", "--suite", suite]);
        assert_eq!(v["result"]["pass"], true, "{suite}");
        assert!(!v["result"]["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn seeded_equivariance_suite() {
    let v = ok(&["verify", "--suite", "equivariance", "--trials", "20", "--seed", "7"]);
    let checks = v["result"]["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 15);
    for c in checks {
        assert!(c["residual"].as_f64().unwrap() <= 1e-3, "{c}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["retract-point", "--shape", "blob", "--at", "1,-2", "3,1", "0.4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn retraction_of_a_disk_matches_the_reciprocal_formula() {
    let v = ok(&["retract-point", "--shape", "circle", "0,-3", "0.5"]);
    let p = xy(&v["result"]["point"]);
    assert!(p[0].abs() < 1e-3 && (p[1] + 1.5).abs() < 1e-3, "{p:?}");
}

#[test]
fn map_inverse_of_a_shifted_disk() {
    let v = ok(&[
        "map",
        "--shape",
        "circle",
        "--r",
        "2",
        "--at",
        "1,0",
        "--point",
        "1,0",
        "--eval",
        "1,2",
        "--inverse",
    ]);
    let p = xy(&v["result"]["values"][0]["value"]);
    assert!(p[0].abs() < 1e-3 && (p[1] - 1.0).abs() < 1e-3, "{p:?}");
}

#[test]
fn map_diagnostics_are_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("diag.json");
    let v = ok(&[
        "map",
        "--shape",
        "egg",
        "--eval",
        "0.5,0.5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(v["residuals"]["boundary_defect"].as_f64().unwrap() <= 1e-3);
    let diag: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(diag["stages"].as_array().unwrap().len() > 100);
}

#[test]
fn reach_offset_and_render_write_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    let v = ok(&["reach", "--shape", "ellipse", "--out", &p("axis.csv")]);
    assert!((v["result"]["reach"].as_f64().unwrap() - 0.5).abs() < 0.01);
    assert!(std::fs::read_to_string(p("axis.csv"))
        .unwrap()
        .starts_with("x,y,radius\n"));
    let v = ok(&["offset", "--shape", "ellipse", "--s", "0.25", "--out", &p("core.json")]);
    assert!(v["residuals"]["reconstruction"].as_f64().unwrap() <= 1e-3);
    let core: Value = serde_json::from_str(&std::fs::read_to_string(p("core.json")).unwrap()).unwrap();
    assert_eq!(core["closed"], true);
    ok(&["render", "--shape", "lune-smoothed", "--out", &p("lune.svg")]);
    let svg = std::fs::read_to_string(p("lune.svg")).unwrap();
    assert_eq!(svg.matches("<path").count(), 2);
    assert_eq!(svg.matches("<circle").count(), 6);
}

#[test]
fn validation_failures_exit_with_two() {
    for args in [
        vec!["center", "--shape", "square"],
        vec!["center"],
        vec!["center", "--shape", "blob", "--r", "2"],
        vec!["offset", "--shape", "ellipse", "--s", "0.6"],
        vec!["map", "--shape", "ellipse", "--point", "5,0"],
        vec!["retract-point", "--shape", "circle", "2,0", "1.5"],
        vec!["center", "--in", "/nonexistent.json"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn figure_eight_input_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eight.json");
    let samples: Vec<[f64; 2]> = (0..64)
        .map(|k| {
            let t = TAU * k as f64 / 64.0;
            [t.sin(), (2.0 * t).sin() / 2.0]
        })
        .collect();
    std::fs::write(&path, serde_json::json!({ "samples": samples }).to_string()).unwrap();
    assert_eq!(run(&["center", "--in", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn unreachable_tolerance_exits_with_three() {
    let out = run(&["map", "--shape", "blob", "--n", "1024", "--tol", "1e-10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn unwritable_output_exits_with_one() {
    let out = run(&["reach", "--shape", "circle", "--out", "/nonexistent/dir/axis.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(Path::new("/nonexistent/dir").read_dir().is_err());
}
