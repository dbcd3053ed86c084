// Copyright 2026 The laplace-series authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.


use std::path::Path;
use std::process::{Command, Output};

use laplace_series::cli::{parse_problem_config, ProblemConfig};
use laplace_series::prelude::*;
use num_complex::Complex64;

const BIN: &str = env!("CARGO_BIN_EXE_laplace-series");

const DISK1: &str = r#"{
  "components": [ { "kind": "disk", "center": [3, 1], "radius": 1 } ],
  "degree": 12,
  "eval": [[2, 0]],
  "levels": [-0.2, -0.6, -1.0],
  "streamlines": { "count": 8, "eps": 0.001 },
  "outputs": { "report": "disk1.json", "csv": "disk1.csv", "svg": "disk1.svg" }
}"#;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN).current_dir(dir).args(args).output().expect("binary runs")
}

fn write_config(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

fn report(dir: &Path, name: &str) -> serde_json::Value {
    serde_json::from_str(&std::fs::read_to_string(dir.join(name)).unwrap()).unwrap()
}

#[test]
fn solve_writes_report_tables_and_figure() {
    let dir = tempfile::tempdir().unwrap();
    write_config(dir.path(), "disk1.json.in", DISK1);
    let out = run(dir.path(), &["solve", "--config", "disk1.json.in", "-o", "out"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("residual"));
    assert!(stdout.contains("measure[0] 1"));
    assert!(stdout.contains("u(2, 0) = -0.58932749"));

    let out_dir = dir.path().join("out");
    let r = report(&out_dir, "disk1.json");
    let u = r["eval"][0]["u"].as_f64().unwrap();
    let problem = Problem::green(vec![BoundaryComponent::disk(Complex64::new(3.0, 1.0), 1.0).unwrap()]).unwrap();
    let sol = solve_problem(&problem, &ExpansionSpec::uniform(&problem, 12), None).unwrap();
    let lib = sol.eval(Complex64::new(2.0, 0.0)).unwrap();
    // The report carries 13 significant digits.
    assert!((u - lib).abs() <= 1e-12 * lib.abs(), "{u} vs {lib}");
    assert!((u + 0.5893274981708).abs() <= 5e-10);
    assert_eq!(r["log_coefficients"][0].as_f64().unwrap(), -1.0);
    assert_eq!(r["measures"]["values"][0]["measure"].as_f64().unwrap(), 1.0);
    assert_eq!(r["cols"].as_u64().unwrap(), 26);

    let csv = std::fs::read_to_string(out_dir.join("disk1.csv")).unwrap();
    assert!(csv.starts_with("kind,level_or_seed,x,y\nequipotential,-0.2,"));
    let stream = std::fs::read_to_string(out_dir.join("disk1.streamlines.csv")).unwrap();
    assert_eq!(stream.split("\n\n").count(), 8);
    let svg = std::fs::read_to_string(out_dir.join("disk1.svg")).unwrap();
    assert!(svg.contains("<circle"));
    assert_eq!(svg.matches("<path").count(), 8 + csv.split("\n\n").count());
}

#[test]
fn repeated_runs_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    write_config(dir.path(), "c.json", DISK1);
    for o in ["a", "b"] {
        assert!(run(dir.path(), &["solve", "--config", "c.json", "-o", o]).status.success());
    }
    for f in ["disk1.json", "disk1.csv", "disk1.streamlines.csv", "disk1.svg"] {
        let a = std::fs::read(dir.path().join("a").join(f)).unwrap();
        let b = std::fs::read(dir.path().join("b").join(f)).unwrap();
        assert_eq!(a, b, "{f}");
    }
}

#[test]
fn flags_override_the_config() {
    let dir = tempfile::tempdir().unwrap();
    write_config(dir.path(), "c.json", DISK1);
    let out = run(dir.path(), &["eval", "--config", "c.json", "--degree", "4", "--npts", "40", "--no-scale", "--at", "4,4"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0], "u(2, 0) = -0.5892272895504");
    assert!(lines[1].starts_with("u(4, 4) = -0.63"));
}

#[test]
fn cantor_level_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["cantor", "-m", "3", "--symmetry", "-o", "."]);
    assert!(out.status.success());
    let r = report(dir.path(), "cantor_m3.json");
    let got: Vec<f64> = r["measures"].as_array().unwrap().iter().map(|v| v.as_f64().unwrap()).collect();
    for (g, p) in got.iter().zip([0.253289, 0.111676, 0.066706, 0.068329]) {
        assert!((g - p).abs() <= 1e-6, "{g} vs {p}");
    }
    assert_eq!(r["degree"].as_u64().unwrap(), 3);
    let general = run(dir.path(), &["cantor", "-m", "3", "-o", "g"]);
    assert!(general.status.success());
    let g = report(&dir.path().join("g"), "cantor_m3.json");
    for (a, b) in got.iter().zip(g["measures"].as_array().unwrap()) {
        assert!((a - b.as_f64().unwrap()).abs() <= 1e-8);
    }
}

#[test]
fn contours_and_streamlines_subcommands() {
    let dir = tempfile::tempdir().unwrap();
    write_config(
        dir.path(),
        "slit.json",
        r#"{ "components": [ { "kind": "slit", "center": [3, 0], "halfspan": [1, -0.5] } ], "window": [-2, 6, -3, 3] }"#,
    );
    let out = run(dir.path(), &["contours", "--config", "slit.json"]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("field.csv")).unwrap();
    assert!(csv.lines().count() > 100);
    assert!(!dir.path().join("report.json").exists());
    let out = run(dir.path(), &["streamlines", "--config", "slit.json"]);
    assert!(out.status.success());
    let csv = std::fs::read_to_string(dir.path().join("field.streamlines.csv")).unwrap();
    assert_eq!(csv.split("\n\n").count(), 24);
}

#[test]
fn bad_inputs_fail_cleanly() {
    let dir = tempfile::tempdir().unwrap();
    write_config(dir.path(), "typo.json", r#"{ "components": [ { "kind": "disk", "center": [3, 1], "radiusss": 1 } ] }"#);
    let out = run(dir.path(), &["solve", "--config", "typo.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("radiusss"));

    write_config(
        dir.path(),
        "overlap.json",
        r#"{ "components": [ { "kind": "disk", "center": [0, 3], "radius": 1 }, { "kind": "disk", "center": [1, 3], "radius": 1 } ] }"#,
    );
    let out = run(dir.path(), &["solve", "--config", "overlap.json"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("geometry"));

    let out = run(dir.path(), &["solve", "--config", "missing.json"]);
    assert!(!out.status.success());
    let out = run(dir.path(), &["cantor", "-m", "13"]);
    assert!(!out.status.success());
    let names: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(names.len(), 2, "{names:?}");
}

#[test]
fn unwritable_output_leaves_nothing_behind() {
    let dir = tempfile::tempdir().unwrap();
    let text = DISK1.replace("\"disk1.svg\"", "\"no/such/dir/disk1.svg\"");
    write_config(dir.path(), "c.json", &text);
    let out = run(dir.path(), &["solve", "--config", "c.json", "-o", "out"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("i/o error"));
    assert_eq!(std::fs::read_dir(dir.path().join("out")).unwrap().count(), 0);
}

#[test]
fn config_round_trips_through_json() {
    let parsed = parse_problem_config(DISK1).unwrap();
    let again = ProblemConfig::from_json(&parsed.config.to_json()).unwrap();
    assert_eq!(again, parsed.config);
    let rebuilt = again.build().unwrap();
    assert_eq!(rebuilt.spec, parsed.spec);
    assert_eq!(rebuilt.problem.components(), parsed.problem.components());
    assert_eq!(rebuilt.eval_points(), parsed.eval_points());
}
