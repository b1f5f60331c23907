use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use gtsf::io::{fixtures, parse_report};
use serde_json::Value;

fn gtsf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtsf")).args(args).output().unwrap()
}

fn gtsf_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gtsf"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn solve_ranks_the_bundled_venues() {
    let text = stdout(&gtsf(&["solve", "--fixture", "example4"]));
    assert!(text.contains("ranking: v3 > v1 > v4 > v2"), "{text}");
    assert!(text.contains("v3           0.5410"), "{text}");
}

#[test]
fn solve_json_is_a_report_document() {
    let out = gtsf(&["solve", "--fixture", "example4", "--format", "json"]);
    let report = parse_report(&stdout(&out)).unwrap();
    assert_eq!(report.ranking.order, ["v3", "v1", "v4", "v2"]);
    assert_eq!(report.matrix.alternatives().len(), 4);
}

#[test]
fn solve_reads_stdin_and_files() {
    let from_stdin = stdout(&gtsf_stdin(&["solve", "-"], fixtures::EXAMPLE4));
    let path = scratch("venues.json", fixtures::EXAMPLE4);
    let from_file = stdout(&gtsf(&["solve", path.to_str().unwrap()]));
    assert_eq!(from_stdin, from_file);
    assert_eq!(from_file, stdout(&gtsf(&["solve", "--fixture", "example4"])));
}

#[test]
fn csv_input_matches_the_equivalent_flags() {
    let csv = "expert,alternative,criterion,phi,chi,psi\n\
               e1,a,c1,0.8,0.2,0.3\ne1,b,c1,0.5,0.4,0.5\n\
               e2,a,c1,0.7,0.3,0.3\ne2,b,c1,0.6,0.3,0.4\n";
    let path = scratch("small.csv", csv);
    let out = json(&gtsf(&["solve", path.to_str().unwrap(), "--format", "json"]));
    assert_eq!(out["ranking"]["order"], serde_json::json!(["a", "b"]));
}

#[test]
fn matrix_prints_only_the_matrix() {
    let out = json(&gtsf(&["matrix", "--fixture", "example4", "--format", "json"]));
    assert!(out.get("ranking").is_none());
    let cell = &out["entries"]["v1"]["f1"];
    assert_eq!(cell["center"]["phi"], 0.65);
    assert!((cell["radius"].as_f64().unwrap() - 0.122).abs() < 1e-3);
}

#[test]
fn distance_reports_both_measures() {
    let out = json(&gtsf(&["distance", "--fixture", "example3", "--format", "json"]));
    let h = out["distances"]["hamming"].as_f64().unwrap();
    let e = out["distances"]["euclidean"].as_f64().unwrap();
    assert!((h - 0.0735092).abs() < 1e-6);
    assert!((e - 0.0782153).abs() < 1e-6);

    let only = json(&gtsf(&["distance", "--fixture", "example3", "--metric", "hamming", "--format", "json"]));
    assert!(only["distances"].get("euclidean").is_none());
}

#[test]
fn similarity_against_the_ideal() {
    let out = json(&gtsf(&["similarity", "0.9,0.21,0.44;0.07", "1,0,0;1", "--format", "json"]));
    assert!((out["similarity"].as_f64().unwrap() - 0.53158).abs() < 1e-5);
}

#[test]
fn aggregate_average_and_geometric() {
    let args = ["aggregate", "0.6,0.5,0.4;0.3", "0.5,0.4,0.3;0.2", "--t", "2", "--format", "json"];
    let avg = json(&gtsf(&args));
    assert!((avg["value"]["center"]["phi"].as_f64().unwrap() - 0.55424).abs() < 1e-5);
    assert!((avg["value"]["radius"].as_f64().unwrap() - 0.06f64.sqrt()).abs() < 1e-12);

    let mut geo_args = args.to_vec();
    geo_args.extend(["--operator", "geometric"]);
    let geo = json(&gtsf(&geo_args));
    assert!((geo["value"]["center"]["psi"].as_f64().unwrap() - 0.35454).abs() < 1e-5);
}

#[test]
fn score_compares_two_values() {
    let out = json(&gtsf(&["score", "0.5,0.2,0.2;0.9", "0.5,0.2,0.2;0.1", "--t", "2", "--sigma", "0.8", "--format", "json"]));
    assert_eq!(out["comparison"]["relation"], "greater");
    assert_eq!(out["comparison"]["decided_by"], "score");
    let neutral = json(&gtsf(&["score", "0.5,0.2,0.2;0.9", "0.5,0.2,0.2;0.1", "--t", "2", "--format", "json"]));
    assert_eq!(neutral["comparison"]["relation"], "equivalent");
}

#[test]
fn exit_codes() {
    assert_eq!(gtsf_stdin(&["solve", "-"], "{").status.code(), Some(2));
    assert_eq!(gtsf(&["solve", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(gtsf(&["solve", "--fixture", "example4", "--t", "0"]).status.code(), Some(2));
    assert_eq!(gtsf(&["score", "0.5,0.2,0.2;0.9", "--sigma", "1.5"]).status.code(), Some(2));
    assert_eq!(gtsf(&["score", "0.5,0.2"]).status.code(), Some(2));

    let invalid = gtsf(&["similarity", "0.9,0.9,0.9;0.1", "1,0,0;1"]);
    assert_eq!(invalid.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&invalid.stderr).contains("power sum"));
}

#[test]
fn schema_errors_name_the_offending_path() {
    let broken = fixtures::EXAMPLE4.replacen("\"e1\": {", "\"e1\": {\"extra\": 1,", 1);
    let out = gtsf_stdin(&["solve", "-"], &broken);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("evaluations.e1"), "{}", String::from_utf8_lossy(&out.stderr));
}
