//! Black-box tests of the command-line interface.

use std::process::{Command, Output};

use num::BigInt;
use parabolic_avoid::output::parse_bfile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_parabolic-avoid"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn CLI")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

#[test]
fn count_known_values() {
    for (l, m, n, expect) in [("2", "2", "4", "20"), ("1", "2", "5", "16"), ("1", "1", "7", "1")] {
        let out = run(&["count", "--l", l, "--m", m, "--n", n]);
        assert!(out.status.success());
        let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(doc["value"], expect);
        assert_eq!(doc["agrees"], true);
        assert_eq!(doc["method"], "recurrence+brute_force");
    }
}

#[test]
fn count_beyond_ceiling_uses_recurrence_only() {
    let out = run(&["count", "--l", "2", "--m", "2", "--n", "30"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["method"], "recurrence");
    assert!(doc["brute_force"].is_null());
}

#[test]
fn series_bfile_exact_bytes_and_round_trip() {
    let out = run(&["series", "--l", "2", "--m", "2", "--N", "6", "--format", "bfile"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text, "0 1\n1 1\n2 2\n3 6\n4 20\n5 68\n6 232\n");
    let parsed = parse_bfile(&text).unwrap();
    assert_eq!(parsed[6], (6, BigInt::from(232)));
}

#[test]
fn series_csv_corollary_values() {
    let out = run(&["series", "--l", "1", "--m", "3", "--N", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "n,coefficient\n0,1\n1,1\n2,2\n3,6\n4,18\n5,54\n"
    );
}

#[test]
fn series_output_is_deterministic() {
    let a = run(&["series", "--l", "2", "--m", "3", "--N", "20"]);
    let b = run(&["series", "--l", "2", "--m", "3", "--N", "20"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn series_writes_file() {
    let dir = std::env::temp_dir().join("parabolic-avoid-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("series.bfile");
    let out = run(&[
        "series",
        "--l",
        "1",
        "--m",
        "1",
        "--N",
        "3",
        "--format",
        "bfile",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1\n1 1\n2 1\n3 1\n");
}

#[test]
fn enumerate_streams_one_line_notation() {
    let out = run(&["enumerate", "--l", "1", "--m", "2", "--a", "0", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2 1 3\n2 3 1\n3 1 2\n3 2 1\n");
}

#[test]
fn enumerate_respects_ceiling_and_override() {
    let out = run(&["enumerate", "--l", "1", "--m", "1", "--n", "13"]);
    assert!(!out.status.success());

    let out = bin()
        .args(["enumerate", "--l", "1", "--m", "1", "--n", "13"])
        .env("PARABOLIC_AVOID_BF_CEILING", "13")
        .output()
        .unwrap();
    assert!(out.status.success());
    // Only the decreasing permutation avoids {12}.
    assert_eq!(stdout(&out), "13 12 11 10 9 8 7 6 5 4 3 2 1\n");
}

#[test]
fn verify_passing_suite_exits_zero() {
    let out = run(&["verify", "--suite", "lemma26", "--s-max", "5"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["failures"], 0);
}

#[test]
fn verify_unknown_suite_fails() {
    let out = run(&["verify", "--suite", "nonsense"]);
    assert!(!out.status.success());
}

#[test]
fn asympt_reports_gamma_and_bound() {
    let out = run(&["asympt", "--l", "2", "--m", "2"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let gamma = doc["gamma"].as_f64().unwrap();
    assert!((gamma - (2.0 + 2f64.sqrt())).abs() < 1e-6);
    let bound = doc["il_bound"].as_f64().unwrap();
    assert!((bound - (2.0 + 5f64.sqrt())).abs() < 1e-9);
}

#[test]
fn bdpp_reports_first_agreement() {
    let out = run(&["bdpp", "--k", "3", "--N", "8"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["first_agreement"], 2);
    // Catalan tail: coefficient of x^8 is 1430.
    assert_eq!(doc["coefficients"][8], "1430");
}

#[test]
fn invalid_parameters_exit_nonzero() {
    for args in [
        vec!["count", "--l", "0", "--m", "2", "--n", "3"],
        vec!["count", "--l", "2", "--m", "2", "--a", "9", "--n", "3"],
        vec!["bdpp", "--k", "2", "--N", "5"],
    ] {
        let out = run(&args);
        assert!(!out.status.success(), "{args:?} should fail");
    }
}
