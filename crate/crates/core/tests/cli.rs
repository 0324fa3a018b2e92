use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const STAIRCASE: &str = include_str!("../data/staircase.json");
const PATH5: &str = include_str!("../data/path5.json");

fn chromsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromsym")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON output")
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn expand_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_temp(&dir, "p.json", PATH5);
    let out = chromsym(&["expand", &f]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["n"], 5);
    let phi: Vec<&str> = v["traces"]["phi"].as_array().unwrap().iter().map(|r| r["value"].as_str().unwrap()).collect();
    assert_eq!(phi, ["5", "3", "7", "0", "1", "0", "0"]);
    assert!(!v["fundamental"].as_array().unwrap().is_empty());
    for b in ["m", "e", "h", "p", "s", "f"] {
        assert!(v["symmetric_function"][b].is_array(), "basis {b}");
    }
}

#[test]
fn expand_from_stdin_matches_file() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_chromsym"))
        .args(["expand", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(PATH5.as_bytes()).unwrap();
    let piped = child.wait_with_output().unwrap();
    let inline = chromsym(&["expand", "--inline", PATH5]);
    assert_eq!(piped.stdout, inline.stdout);
}

#[test]
fn q_expansion_and_non_symmetric_witness() {
    let out = chromsym(&["expand", "--q", "--inline", PATH5]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["traces"]["phi"][0]["value"], "q^4 + q^3 + q^2 + q + 1");
    let star = r#"{"n":3,"edges":[[1,2],[1,3]]}"#;
    let out = chromsym(&["expand", "--q", "--inline", star]);
    assert_eq!(out.status.code(), Some(2));
    let v = json(&out);
    assert_eq!(v["error"], "not-symmetric");
    assert!(v["witness"]["first"]["composition"].is_string());
}

#[test]
fn immanants() {
    let out = chromsym(&["immanant", "--inline", "1 0 0\n0 1 0\n0 0 1", "--trace", "epsilon:3"]);
    assert_eq!(json(&out)["value"], "1");
    let out = chromsym(&["immanant", "--inline", STAIRCASE, "--trace", "phi:3,2"]);
    assert_eq!(json(&out)["value"], "7");
    let out = chromsym(&["immanant", "--network", "--inline", STAIRCASE, "--trace", "eta:5"]);
    let v = json(&out);
    assert_eq!(v["value"], "16");
    let sk = v["skeletons"].as_array().unwrap();
    let families: u64 = sk.iter().map(|s| s["families"].as_u64().unwrap()).sum();
    assert_eq!(families, 16);
    let out = chromsym(&["immanant", "--inline", "[[1,2],[3,4]]", "--trace", "phi:3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trace_eval_targets() {
    let out = chromsym(&["trace-eval", "--inline", PATH5, "--trace", "phi:3,2"]);
    assert_eq!(json(&out)["value"], "7");
    let out = chromsym(&["trace-eval", "--kl", "321", "--trace", "eta:3"]);
    assert_eq!(json(&out)["value"], "6");
    let out = chromsym(&["trace-eval", "--kl", "4231", "--trace", "eta:4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tableaux_counts() {
    let count = |input: &str, pred: &str| json(&chromsym(&["tableaux-count", "--inline", input, "--shape", "3,2", "--predicate", pred]))["count"].clone();
    assert_eq!(count(PATH5, "standard-and-cyclic"), 4);
    assert_eq!(count(PATH5, "standard-and-record-free"), 5);
    assert_eq!(count(STAIRCASE, "column-strict-cylindrical"), 4);
}

#[test]
fn verify_suites() {
    let out = chromsym(&["verify", "eta-interpretations", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["pass"], true);
    let out = chromsym(&["verify", "lindstrom", "--seed", "7", "--trials", "20", "--failures-only"]);
    assert_eq!(out.status.code(), Some(0));
    let out = chromsym(&["verify", "stembridge-rect", "--paper-counterexample", "--failures-only"]);
    assert_eq!(out.status.code(), Some(0));
    let div = &json(&out)["expected_divergences"][0];
    assert_eq!((div["lhs"].as_str(), div["rhs"].as_str()), (Some("7"), Some("4")));
    assert_eq!(chromsym(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(chromsym(&["verify", "kostka", "--n", "12"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let runs: Vec<Vec<u8>> = (0..2).map(|_| chromsym(&["verify", "skeletons", "--n", "3", "--trials", "5", "--seed", "3"]).stdout).collect();
    assert_eq!(runs[0], runs[1]);
    let runs: Vec<Vec<u8>> = (0..2).map(|_| chromsym(&["expand", "--inline", PATH5, "--format", "csv"]).stdout).collect();
    assert_eq!(runs[0], runs[1]);
}

#[test]
fn csv_output() {
    let out = chromsym(&["expand", "--inline", PATH5, "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("table,key,value\n"));
    assert!(text.contains("phi,\"3,2\",7\n"));
}

#[test]
fn usage_errors() {
    assert_eq!(chromsym(&["expand", "--inline", "{\"n\": 3,"]).status.code(), Some(2));
    assert_eq!(chromsym(&["expand", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(chromsym(&["expand"]).status.code(), Some(2));
    assert_eq!(chromsym(&["frobnicate"]).status.code(), Some(2));
    let big = r#"{"n":9,"relations":[]}"#;
    assert_eq!(chromsym(&["expand", "--inline", big]).status.code(), Some(2));
    assert_eq!(chromsym(&["tableaux-count", "--inline", PATH5, "--shape", "2,2"]).status.code(), Some(2));
}
