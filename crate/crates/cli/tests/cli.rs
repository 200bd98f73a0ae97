use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn symdirac(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symdirac"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn pair_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

#[test]
fn eigenvalue_of_the_four_sphere() {
    let o = symdirac(&["eigenvalue", "sphere-even(2)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lambda1_squared"]["num"], 2);
    assert_eq!(v["lambda1_squared"]["den"], 3);
    assert_eq!(v["max_pairing_value"], serde_json::json!({"num": 2, "den": 3}));
    assert_eq!(v["lift_dominant"], true);
    assert_eq!(v["n"], 4);
}

#[test]
fn eigenvalue_of_the_two_sphere_as_text() {
    let o = symdirac(&["eigenvalue", "sphere-even(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1/2 (≈ 0.500000)"), "{}", stdout(&o));
}

#[test]
fn complex_projective_plane_is_rejected() {
    let f = pair_file(r#"{"g": {"family": "A", "rank": 2}, "k_simple_roots": [[1, -1, 0]]}"#);
    let o = symdirac(&["eigenvalue", "--pair-file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("not spin"), "{err}");
    assert!(err.contains("3/2"), "{err}");
}

#[test]
fn inline_document_matches_catalog_entry() {
    let f = pair_file(r#"{"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, -1], [1, 1]]}"#);
    let o = symdirac(&["eigenvalue", "--pair-file", f.path().to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["lambda1_squared"]["approx"], "0.666667");
}

#[test]
fn catalog_document() {
    let f = pair_file(r#"{"catalog": "sphere-even(1)"}"#);
    let o = symdirac(&["decompose", "--pair-file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("total      2 = 2^1"), "{}", stdout(&o));
}

#[test]
fn verify_two_sphere_with_spectrum() {
    let o = symdirac(&["verify", "sphere-even(1)", "--spectrum-cutoff", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let eigen: Vec<(i64, i64)> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| (l["eigenvalue"]["num"].as_i64().unwrap(), l["eigenvalue"]["den"].as_i64().unwrap()))
        .collect();
    assert_eq!(eigen, vec![(1, 2), (2, 1)]);
    let min = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "spectrum-minimum")
        .unwrap();
    assert_eq!(min["outcome"], "pass");
}

#[test]
fn invalid_subsystems_are_invalid_input() {
    // In B2 the short roots e1, e2 generate {±e1, ±e2}, yet e1+e2 is a root.
    let f = pair_file(r#"{"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, 0], [0, 1]]}"#);
    let o = symdirac(&["verify", "--pair-file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    assert!(stderr(&o).contains("not closed"), "{}", stderr(&o));

    // An acute pair is not a simple system.
    let f = pair_file(r#"{"g": {"family": "A", "rank": 3}, "k_simple_roots": [[1, -1, 0, 0], [1, 0, -1, 0]]}"#);
    let o = symdirac(&["verify", "--pair-file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_two() {
    let f = pair_file("{not json");
    assert_eq!(symdirac(&["eigenvalue", "--pair-file", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(symdirac(&["eigenvalue", "nowhere(3)"]).status.code(), Some(2));
    assert_eq!(symdirac(&["eigenvalue"]).status.code(), Some(2));
    assert_eq!(symdirac(&["spectrum", "sphere-even(1)", "--cutoff", "1/0"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_three() {
    let o = symdirac(&["spectrum", "sphere-even(2)", "--cutoff", "10", "--max-dimension", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("cap exceeded"));
}

#[test]
fn list_as_text_and_json() {
    let o = symdirac(&["list"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sphere-even(2)"));
    let o = symdirac(&["list", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let entries = v.as_array().unwrap();
    assert!(entries.len() >= 10);
    let s4 = entries.iter().find(|e| e["name"] == "sphere-even(2)").unwrap();
    assert_eq!(s4["spin"], true);
    assert_eq!(s4["n"], 4);
}

#[test]
fn verify_all_passes() {
    let o = symdirac(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failed"));
}

#[test]
fn structured_output_is_deterministic() {
    let args = ["verify", "G", "--format", "json", "--spectrum-cutoff", "7"];
    let a = symdirac(&args);
    let b = symdirac(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
