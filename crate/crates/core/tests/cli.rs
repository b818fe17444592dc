//! The command-line binary: exit codes, formats and reproducible output.

use std::process::{Command, Output};

use strand::report::without_timing;

fn strand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strand")).args(args).output().expect("binary runs")
}

#[test]
fn char_jpw_table() {
    let out = strand(&["char-jpw", "--n", "4", "--r", "1", "--s", "1", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows, vec![vec!["0", "6", "[1,1]"], vec!["1", "15", "[2,1,1]"], vec!["2", "10", "[3,1,1,1]"]]);
}

#[test]
fn char_lascoux_json() {
    let out = strand(&["char-lascoux", "--n", "3", "--m", "3", "--r", "1", "--s", "1", "--max-degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "strand-report/1");
    let d0 = &v["report"]["degrees"][0]["character"][0];
    assert_eq!(d0["shapeE"], serde_json::json!([1, 1]));
    assert_eq!(d0["shapeF"], serde_json::json!([1, 1]));
    assert_eq!(v["report"]["degrees"][1]["character"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_pe_reports_equality() {
    let out = strand(&["verify-pe", "--n", "4", "--r", "1", "--s", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["report"]["conjecture"]["per_degree_equal"], serde_json::json!([true, true, true]));
    assert_eq!(v["report"]["irreducible"]["verdict"], "irreducible");
}

#[test]
fn refusals_exit_two() {
    let out = strand(&["build-pe", "--n", "3", "--r", "2", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("requires dim E > s+r"));
    let out = strand(&["verify-gl", "--n", "3", "--m", "3", "--r", "0", "--s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = strand(&["build-pe", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_strand"))
        .args(["build-pe", "--n", "5", "--r", "1", "--s", "2"])
        .env("STRAND_AMBIENT_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap"));
}

#[test]
fn output_file_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = strand(&["verify-gl", "--n", "3", "--m", "3", "--r", "1", "--s", "1", "--out", path.to_str().unwrap(), "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let (a, b) = (std::fs::read_to_string(a).unwrap(), std::fs::read_to_string(b).unwrap());
    assert_eq!(without_timing(&a).unwrap(), without_timing(&b).unwrap());
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);
}
