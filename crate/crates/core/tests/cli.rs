use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const E2: &str = r#"{"points":["a","b","c","d"],"opens":[[],["a"],["d"],["a","b"],["a","d"],["a","b","d"],["a","b","c","d"]]}"#;
const Q1: &str = r#"{"points":["a","b","c","d"],"min_basis":{"a":["a"],"b":["a","b"],"c":["c"],"d":["c","d"]}}"#;
const SIERPINSKI: &str = r#"{"points":["a","b"],"opens":[[],["a"],["a","b"]]}"#;

fn file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("finspace-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finspace")).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn matrix_and_region() {
    let e2 = file("e2.json", E2);
    let e2 = e2.to_str().unwrap();
    let m = json(&run(&["matrix", e2, "--json"]));
    assert_eq!(m["rows"], serde_json::json!([[0, 1, 3, 1], [0, 0, 2, 1], [0, 0, 0, 0], [1, 2, 3, 0]]));
    assert_eq!(m["is_t0"], true);
    let text = String::from_utf8(run(&["matrix", e2]).stdout).unwrap();
    assert!(text.contains('a') && text.contains('3'));

    let r = json(&run(&["region", e2, "--subset", "a,c"]));
    assert_eq!(r["center"], serde_json::json!(["a"]));
    assert_eq!(r["radius"], 1);
}

#[test]
fn union_and_quasi() {
    let e2 = file("e2u.json", E2);
    let q1 = file("q1.json", Q1);
    let u = json(&run(&["union", e2.to_str().unwrap(), "--subsets", "d|b"]));
    assert_eq!(u["case"], "larger-loses-center");
    assert_eq!(u["consistent"], true);
    assert_eq!(u["direct"]["radius"], 2);
    let q = json(&run(&["quasi", q1.to_str().unwrap(), "--subset", "a,b", "--balls"]));
    assert_eq!(q["quasi_center"], serde_json::json!(["a", "b"]));
    assert_eq!(q["quasi_radius"], 1);
    assert_eq!(q["largest_balls"].as_array().unwrap().len(), 2);
}

#[test]
fn balls() {
    let e2 = file("e2b.json", E2);
    let e2 = e2.to_str().unwrap();
    let b = json(&run(&["balls", e2, "--center", "a", "--radius", "2"]));
    assert_eq!(b["ball"], serde_json::json!(["a", "b", "d"]));
    let b = json(&run(&["balls", e2, "--center", "a", "--radius", "1", "--backward"]));
    assert_eq!(b["ball"], serde_json::json!(["a", "b", "c"]));
    assert_eq!(run(&["balls", e2, "--center", "a", "--radius", "0"]).status.code(), Some(1));
}

#[test]
fn space_transformers() {
    let s = file("s.json", SIERPINSKI);
    let s = s.to_str().unwrap();
    let out = |args: &[&str]| String::from_utf8(run(args).stdout).unwrap().trim().to_string();
    assert_eq!(out(&["opposite", s]), r#"{"points":["a","b"],"min_basis":{"a":["a","b"],"b":["b"]}}"#);
    assert_eq!(out(&["quotient", s]), r#"{"points":["a","b"],"min_basis":{"a":["a"],"b":["a","b"]}}"#);
    // both points are beat points; the lowest index goes first
    assert_eq!(out(&["core", s]), r#"{"points":["b"],"min_basis":{"b":["b"]}}"#);
    let p: Value = serde_json::from_str(&out(&["product", s, s])).unwrap();
    assert_eq!(p["points"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_and_dot() {
    assert_eq!(String::from_utf8(run(&["enumerate", "--n", "4", "--count-only"]).stdout).unwrap().trim(), "355");
    assert_eq!(String::from_utf8(run(&["enumerate", "--n", "3", "--t0", "--count-only"]).stdout).unwrap().trim(), "19");
    let listed = String::from_utf8(run(&["enumerate", "--n", "2"]).stdout).unwrap();
    assert_eq!(listed.lines().count(), 4);
    assert_eq!(run(&["enumerate", "--n", "6"]).status.code(), Some(1));

    let e2 = file("e2d.json", E2);
    let dot = String::from_utf8(run(&["dot", e2.to_str().unwrap(), "--lattice"]).stdout).unwrap();
    assert!(dot.starts_with("digraph lattice {"));
    assert!(dot.contains("\"{a}\" -> \"{a,b}\";"));
}

#[test]
fn verify_reports_json_lines() {
    let out = run(&["verify", "--max-n", "2", "--prop", "chain_theorems"]);
    assert_eq!(out.status.code(), Some(0));
    let line: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["property"], "chain_theorems");
    assert_eq!(line["passed"], true);
    assert_eq!(line["spaces_checked"], 5);

    let out = run(&["verify", "--max-n", "3", "--prop", "subspace_monotonicity"]);
    assert_eq!(out.status.code(), Some(2));
    let line: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(line["passed"], false);
    assert!(line["counterexample"]["spaces"][0]["min_basis"].is_object());
}

#[test]
fn input_errors() {
    let broken = file("bad.json", "{\"points\":[\"x\"],\n\"opens\":[[],[\"y\"]]}");
    let out = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
    assert!(err.contains("y"), "{err}");
}
