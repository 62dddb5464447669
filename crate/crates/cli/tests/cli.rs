// Copyright 2026 The choquard developers
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


use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

const BASELINE: &str = r#"{"grid": {"dim": 2, "points": 64, "box": 16.0}, "params": {"alpha": 1.0, "p": 2.0}}"#;

fn choquard(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_choquard"))
        .args(args)
        .env("CHOQUARD_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn json(path: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn missing_config_names_the_path() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nowhere.json");
    let out = choquard(&["solve", "--config", s(&missing), "--out", s(dir.path())]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("nowhere.json"));
    assert_eq!(code(&choquard(&["solve"])), 2);
}

#[test]
fn solve_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", BASELINE);
    let out_dir = dir.path().join("solve");
    let out = choquard(&["solve", "--config", s(&cfg), "--out", s(&out_dir)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let report = json(&out_dir.join("report.json"));
    assert_eq!(report["classification"], "converged");
    assert!(report["nehari"].as_f64().unwrap().abs() <= 1e-6);
    let manifest = json(&out_dir.join("manifest.json"));
    assert_eq!(manifest["config_hash"].as_str().unwrap().len(), 64);
    assert_eq!(manifest["outputs"].as_array().unwrap().len(), 2);
    assert!(!manifest["finished"].as_str().unwrap().is_empty());

    let solution = out_dir.join("solution.chqf");
    let out = choquard(&["check", s(&solution), "--config", s(&cfg)]);
    assert_eq!(code(&out), 0);
    let checked: Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["residual", "nehari", "pohozaev"] {
        let a = checked[key].as_f64().unwrap();
        let b = report[key].as_f64().unwrap();
        assert!((a - b).abs() <= 1e-12, "{key}: {a} vs {b}");
    }

    // doubling the field breaks the pairing identity
    let u = choquard::io::read_field(&solution).unwrap();
    let doubled = dir.path().join("doubled.chqf");
    choquard::io::write_field(&doubled, &u.scaled(2.0)).unwrap();
    let out = choquard(&["check", s(&doubled), "--alpha", "1", "--p", "2"]);
    assert_eq!(code(&out), 1);
    let checked: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(checked["nehari"].as_f64().unwrap().abs() > 1.0);

    // a grid that disagrees with the configuration
    let other = write(dir.path(), "other.json", &BASELINE.replace("64", "32"));
    assert_eq!(code(&choquard(&["check", s(&solution), "--config", s(&other)])), 2);
    assert_eq!(code(&choquard(&["check", s(&solution)])), 2);
}

#[test]
fn damaged_field_files() {
    let dir = tempfile::tempdir().unwrap();
    let u = choquard::spectral::Field::gaussian(choquard::spectral::GridSpec::new(2, 16, 8.0).unwrap(), &[0.0, 0.0], 1.0, 1.0);
    let bytes = choquard::io::encode_field(&u);
    let cut = dir.path().join("cut.chqf");
    fs::write(&cut, &bytes[..bytes.len() / 2]).unwrap();
    assert_eq!(code(&choquard(&["check", s(&cut), "--alpha", "1", "--p", "2"])), 2);
    let bad = dir.path().join("bad.chqf");
    fs::write(&bad, b"not a field at all, not even close").unwrap();
    assert_eq!(code(&choquard(&["check", s(&bad), "--alpha", "1", "--p", "2"])), 2);
}

#[test]
fn oracle_modes() {
    let out = choquard(&["oracle", "--zero"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("interior-third"));

    let out = choquard(&["oracle", "--dim", "1", "--alpha", "0.5", "--points", "32", "--box", "8"]);
    assert!(matches!(code(&out), 0 | 1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("interior-third"));

    let out = choquard(&["oracle", "--alpha", "1.99"]);
    assert!(matches!(code(&out), 0 | 1));

    // 128^2 points exceed the direct-sum guard
    assert_eq!(code(&choquard(&["oracle", "--points", "128"])), 2);
}

#[test]
fn empty_sweep_writes_a_header() {
    let dir = tempfile::tempdir().unwrap();
    let plan = write(dir.path(), "plan.json", r#"{"grids": [], "alphas": [1.0], "ps": [2.0]}"#);
    let out_dir = dir.path().join("sweep");
    let out = choquard(&["sweep", "--config", s(&plan), "--out", s(&out_dir), "--strict"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        fs::read_to_string(out_dir.join("sweep.csv")).unwrap(),
        "N,alpha,p,L,M,mp,residual,nehari,pohozaev,classification,seconds\n"
    );
    assert!(out_dir.join("manifest.json").exists());
}

#[test]
fn three_point_sweep() {
    let dir = tempfile::tempdir().unwrap();
    let plan = write(
        dir.path(),
        "plan.json",
        r#"{"grids": [{"dim": 2, "points": 32, "box": 16.0}], "alphas": [1.0], "ps": [1.2, 2.0, 3.5], "seed": 5}"#,
    );
    let out_dir = dir.path().join("sweep");
    let out = choquard(&["sweep", "--config", s(&plan), "--out", s(&out_dir), "--snapshots", "--strict"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let csv = fs::read_to_string(out_dir.join("sweep.csv")).unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].contains(",converged,"));
    assert!(out_dir.join("2d_a1_p2_M32.chqf").exists());
    let manifest = json(&out_dir.join("manifest.json"));
    assert_eq!(manifest["seed"], 5);
}

#[test]
fn deflation_without_known_solutions_is_a_solve() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", &BASELINE.replace("64", "32"));
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    assert_eq!(code(&choquard(&["solve", "--config", s(&cfg), "--out", s(&a)])), 0);
    assert_eq!(code(&choquard(&["deflate", "--config", s(&cfg), "--out", s(&b)])), 0);
    assert_eq!(fs::read(a.join("solution.chqf")).unwrap(), fs::read(b.join("solution.chqf")).unwrap());
    let (ra, mut rb) = (json(&a.join("report.json")), json(&b.join("report.json")));
    assert_eq!(rb["distance_to_known"], Value::Null);
    rb.as_object_mut().unwrap().remove("distance_to_known");
    assert_eq!(ra, rb);
}

#[test]
fn overrides_and_bad_values() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", BASELINE);
    let out_dir = dir.path().join("o");
    let out = choquard(&["solve", "--config", s(&cfg), "--out", s(&out_dir), "--points", "32", "--max-iter", "2"]);
    assert_eq!(code(&out), 1);
    let report = json(&out_dir.join("report.json"));
    assert_eq!(report["classification"], "maxiter");
    let manifest = json(&out_dir.join("manifest.json"));
    assert_eq!(manifest["config"]["grid"]["points"], 32);

    assert_eq!(code(&choquard(&["solve", "--config", s(&cfg), "--out", s(&out_dir), "--p", "0.9"])), 2);
    assert_eq!(code(&choquard(&["solve", "--config", s(&cfg), "--out", s(&out_dir), "--points", "63"])), 2);
    let one_d = write(dir.path(), "one.json", r#"{"grid": {"dim": 1, "points": 64, "box": 16.0}, "params": {"alpha": 0.5, "p": 2.0}}"#);
    assert_eq!(code(&choquard(&["solve", "--config", s(&one_d), "--out", s(&out_dir)])), 2);
}

/// Above the existence window the profile collapses onto a few cells.
#[test]
fn supercritical_solve_collapses() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", &BASELINE.replace("64", "128").replace("2.0}", "3.5}"));
    let out_dir = dir.path().join("o");
    let out = choquard(&["solve", "--config", s(&cfg), "--out", s(&out_dir)]);
    let report = json(&out_dir.join("report.json"));
    println!("exit {}: {}", code(&out), String::from_utf8_lossy(&out.stdout));
    assert!(matches!(code(&out), 0 | 1));
    assert!(report["effective_cells"].as_f64().unwrap() < 10.0);
    assert!(report["pohozaev"].as_f64().unwrap().abs() > 0.05);
}

#[test]
fn refine_and_brezislieb_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "run.json", &BASELINE.replace("64", "32").replace("16.0", "8.0"));
    let out_dir = dir.path().join("r");
    let out = choquard(&["refine", "--config", s(&cfg), "--out", s(&out_dir), "--levels", "2"]);
    assert!(matches!(code(&out), 0 | 1));
    let csv = fs::read_to_string(out_dir.join("refine.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);

    let out_dir = dir.path().join("b");
    let out = choquard(&["brezislieb", "--config", s(&cfg), "--out", s(&out_dir), "--shifts", "4,8,16"]);
    assert!(matches!(code(&out), 0 | 1));
    let csv = fs::read_to_string(out_dir.join("brezislieb.csv")).unwrap();
    assert_eq!(csv.lines().next().unwrap(), "shift,distance,gap,relative_gap");
    assert_eq!(csv.lines().count(), 4);
    assert_eq!(code(&choquard(&["brezislieb", "--config", s(&cfg), "--out", s(&out_dir), "--shifts", "40"])), 2);
}
