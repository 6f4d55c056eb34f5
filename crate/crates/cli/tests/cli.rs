use std::path::Path;
use std::process::{Command, Output};

use tricurves::scenarios::Report;

fn tricurves(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tricurves"))
        .args(args)
        .env_remove("TCL_DEFAULT_TRIALS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("x.svg");
    let cases: &[(&[&str], i32)] = &[
        (&["verify", "thm4-yff-medial", "--trials", "5", "--seed", "1"], 0),
        (&["verify", "corr-excentral", "--trials", "3"], 0),
        (&["verify", "corr-excentral", "--trials", "3", "--strict"], 2),
        (&["verify", "corr-medial", "--trials", "3", "--strict"], 0),
        (&["verify", "nosuch"], 64),
        (&["verify", "corr-medial", "--trials", "0"], 64),
        (&["verify", "corr-medial", "--trials", "many"], 64),
        (&["center", "--triangle", "3,4,5", "--center", "I"], 0),
        (&["center", "--triangle", "1,2,5", "--center", "I"], 65),
        (&["center", "--triangle", "3,4", "--center", "I"], 65),
        (&["center", "--triangle", "3,x,5", "--center", "I"], 65),
        (&["center", "--triangle", "3,4,5", "--center", "nosuch"], 64),
        (&["center", "--triangle", "3,4,5", "--center", "O"], 0),
        (&["center", "--triangle", "3,4,5", "--center", "X25"], 65),
        (&["list-scenarios"], 0),
        (&["frobnicate"], 64),
        (&["--help"], 0),
        (&["render", "--curve", "circumcircle", "--triangle", "3,4,6", "--svg", path(&svg)], 0),
        (&["render", "--curve", "nosuch", "--triangle", "3,4,6", "--svg", path(&svg)], 64),
        (&["render", "--scenario", "nosuch", "--triangle", "3,4,6", "--svg", path(&svg)], 64),
        (&["render", "--curve", "circumcircle", "--triangle", "3,4,6", "--svg", path(&svg), "--grid", "8"], 64),
        (&["render", "--curve", "circumcircle", "--triangle", "3,4,9", "--svg", path(&svg)], 65),
        (&["render", "--curve", "jerabek", "--triangle", "3,4,5", "--svg", path(&svg)], 65),
        (&["render", "--curve", "circumcircle", "--triangle", "3,4,6", "--svg", "/nonexistent/dir/x.svg"], 74),
        (&["render", "--curve", "circumcircle", "--triangle", "3,4,6"], 64),
    ];
    for (args, code) in cases {
        let o = tricurves(args);
        assert_eq!(o.status.code(), Some(*code), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn center_examples() {
    let o = tricurves(&["center", "--triangle", "3,4,5", "--center", "I"]);
    assert_eq!(stdout(&o).trim(), "3:4:5");
    let o = tricurves(&["center", "--triangle", "6,9,13", "--center", "O", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["center"], "O");
    assert_eq!(v["triangle"], serde_json::json!(["6", "9", "13"]));
    assert_eq!(v["barycentric"], serde_json::json!(["1926", "2511", "-2197"]));
}

#[test]
fn center_expression_is_a_midpoint() {
    let mid = stdout(&tricurves(&["center", "--triangle", "6,9,13", "--center", "M_IH"]));
    let expr = stdout(&tricurves(&["center", "--triangle", "6,9,13", "--center", "midpoint(X1, X4)"]));
    assert_eq!(mid, expr);
    let scaled = stdout(&tricurves(&["center", "--triangle", "3/2,2,5/2", "--center", "I"]));
    assert_eq!(scaled.trim(), "3:4:5");
}

#[test]
fn verify_ndjson_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let p = dir.path().join(name);
        let o = tricurves(&["verify", "all", "--trials", "4", "--seed", "7", "--json", path(&p)]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().count(), 18, "one summary line per scenario");
        std::fs::read_to_string(p).unwrap()
    };
    let (a, b) = (run("a.ndjson"), run("b.ndjson"));
    let strip = |s: &str| -> Vec<serde_json::Value> {
        s.lines()
            .map(|l| {
                let mut v: serde_json::Value = serde_json::from_str(l).unwrap();
                v.as_object_mut().unwrap().remove("elapsed_ms");
                v
            })
            .collect()
    };
    assert_eq!(strip(&a), strip(&b));
    for line in a.lines() {
        let r: Report = serde_json::from_str(line).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), line);
        assert_eq!(r.trials, 4);
        assert_eq!(r.seed, 7);
    }
}

#[test]
fn verify_without_json_writes_reports_to_stdout() {
    let o = tricurves(&["verify", "thm4-yff-medial", "--trials", "5", "--seed", "1"]);
    let r: Report = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(r
        .claims
        .iter()
        .filter(|c| c.kind == tricurves::scenarios::ClaimKind::EccentricityValue)
        .all(|c| c.failed_trials == 0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("thm4-yff-medial"));
}

#[test]
fn default_trials_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_tricurves"))
        .args(["verify", "corr-medial"])
        .env("TCL_DEFAULT_TRIALS", "3")
        .output()
        .unwrap();
    let r: Report = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r.trials, 3);
}

#[test]
fn fail_fast_keeps_going_without_failures() {
    let o = tricurves(&["verify", "all", "--trials", "2", "--fail-fast"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 18);
}

fn csv_rows(p: &Path) -> Vec<(usize, bool, f64, f64)> {
    csv::Reader::from_path(p)
        .unwrap()
        .records()
        .map(|r| {
            let r = r.unwrap();
            (r[1].parse().unwrap(), r[2].parse().unwrap(), r[3].parse().unwrap(), r[4].parse().unwrap())
        })
        .collect()
}

#[test]
fn circumcircle_is_one_loop_at_any_grid() {
    let dir = tempfile::tempdir().unwrap();
    for grid in ["16", "512"] {
        let p = dir.path().join(format!("c{grid}.csv"));
        let o =
            tricurves(&["render", "--curve", "circumcircle", "--triangle", "3,4,6", "--grid", grid, "--csv", path(&p)]);
        assert!(o.status.success());
        let rows = csv_rows(&p);
        assert!(rows.iter().all(|r| r.0 == 0 && r.1), "grid {grid}: a single closed chain");
        let (first, last) = (rows.first().unwrap(), rows.last().unwrap());
        assert_eq!((first.2, first.3), (last.2, last.3));
    }
}

#[test]
fn scenario_svg_labels_fit_points() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("fig1.svg");
    let o = tricurves(&["render", "--scenario", "thm1-jerabek-excentral", "--triangle", "6,9,13", "--svg", path(&p)]);
    assert!(o.status.success());
    let svg = std::fs::read_to_string(&p).unwrap();
    assert!(svg.starts_with("<svg"));
    for label in ["I1", "I2", "I3", "Be", "I", "Mi", "L"] {
        assert!(svg.contains(&format!(">{label}</text>")), "missing {label}");
    }
    assert!(svg.contains("<polyline"));

    let o = tricurves(&[
        "render",
        "--scenario",
        "thm1-jerabek-excentral",
        "--triangle",
        "6,9,13",
        "--svg",
        path(&p),
        "--no-labels",
    ]);
    assert!(o.status.success());
    assert!(!std::fs::read_to_string(&p).unwrap().contains("<text"));
}

#[test]
fn curve_without_real_points_warns() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.svg");
    let o = tricurves(&["render", "--curve", "conic:1,1,1,0,0,0", "--triangle", "3,4,6", "--svg", path(&p)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
    let svg = std::fs::read_to_string(&p).unwrap();
    assert!(svg.contains("<circle") && !svg.contains("<polyline"));
}

#[test]
fn named_cubics_render() {
    let dir = tempfile::tempdir().unwrap();
    for curve in ["thomson", "darboux", "lucas", "jerabek", "cubic:0,1,-1,-1,0,1,0,1,-1,0"] {
        let p = dir.path().join("k.csv");
        let o = tricurves(&["render", "--curve", curve, "--triangle", "6,9,13", "--csv", path(&p)]);
        assert!(o.status.success(), "{curve}");
        assert!(!csv_rows(&p).is_empty(), "{curve}");
    }
}
