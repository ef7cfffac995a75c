use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_contactlie"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&o.stdout));
    })
}

/// Writes the family file into a fresh temporary directory.
fn construct(family: &[&str]) -> (tempfile::TempDir, PathBuf) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(format!("{}.json", family.join("_").replace(',', "-")));
    let mut args = vec!["construct"];
    args.extend_from_slice(family);
    args.extend(["-o", path.to_str().unwrap()]);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    (dir, path)
}

fn dim_of(family: &[&str]) -> u64 {
    let mut args = vec!["construct"];
    args.extend_from_slice(family);
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    json(&o)["dim"].as_u64().unwrap()
}

#[test]
fn construct_dimensions() {
    assert_eq!(dim_of(&["heisenberg", "2"]), 5);
    assert_eq!(dim_of(&["qbar", "2", "4"]), 35);
    assert_eq!(dim_of(&["q", "2", "3"]), 25);
    // compositions (1,1,1) and (3) cut out the Borel of sl3
    assert_eq!(dim_of(&["seaweed-sl", "3", "1,1,1", "3"]), 5);
}

#[test]
fn analyze_heisenberg() {
    let (_d, p) = construct(&["heisenberg", "1"]);
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["index"], 1);
    assert_eq!(v["contact"], true);
    assert_eq!(v["p"], "z");
    assert_eq!(v["f"], "z^2");
}

#[test]
fn analyze_non_contact_quotient() {
    let (_d, p) = construct(&["qbar", "1", "1"]);
    let v = json(&run(&["analyze", p.to_str().unwrap()]));
    assert_eq!(v["index"], 1);
    assert_eq!(v["contact"], false);
    assert_eq!(v["stabiliser_class"], "nilpotent");
}

#[test]
fn analyze_sl2() {
    let (_d, p) = construct(&["sl", "2"]);
    let v = json(&run(&["analyze", p.to_str().unwrap(), "--semiinv"]));
    assert_eq!(v["index"], 1);
    assert_eq!(v["contact"], true);
    assert_eq!(v["codim2"], true);
    assert!(v["semiinv"].is_object());
}

#[test]
fn same_seed_same_bytes() {
    let (_d, p) = construct(&["qbar", "2", "2"]);
    let a = run(&["--seed", "7", "analyze", p.to_str().unwrap()]);
    let b = run(&["--seed", "7", "analyze", p.to_str().unwrap()]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["--seed", "3", "verify", "t-ind", "--max", "2"]);
    let b = run(&["--seed", "3", "--jobs", "1", "verify", "t-ind", "--max", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_reports_pass_table() {
    let o = run(&["verify", "dirpr", "ex-k"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 2);
    let o = run(&["--pretty", "verify", "takiff"]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("== takiff : pass"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "nonsense", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--mode", "guess", "verify", "dirpr"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    // an equivalence instance filter that matches nothing is an input error too
    assert_eq!(run(&["verify", "equivalence", "--families", "nothing"]).status.code(), Some(2));
}

#[test]
fn jacobi_violation_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    // [a,b] = c, [b,c] = a, [a,c] = a breaks the Jacobi identity
    let text = r#"{"dim": 3, "basis": ["a", "b", "c"], "brackets": [
        {"i": 0, "j": 1, "c": {"2": "1"}},
        {"i": 1, "j": 2, "c": {"0": "1"}},
        {"i": 0, "j": 2, "c": {"0": "1"}}
    ]}"#;
    std::fs::write(&p, text).unwrap();
    let o = run(&["analyze", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2), "{}", String::from_utf8_lossy(&o.stderr));
}
