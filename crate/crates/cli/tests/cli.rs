use std::io::Write as _;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_grassmorph"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {:?}", out.stdout));
    (v, out.status.code().unwrap())
}

#[test]
fn classify_single_classes() {
    let (v, code) = json(&["classify", "1", "15"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["status"], "NotRealizable");
    assert_eq!(v["seed"], 0);
    let (v, _) = json(&["classify", "3", "1"]);
    assert_eq!(v["verdict"]["status"], "Realizable");
    assert_eq!(v["witness_text"], "Dual(Split(1,1))");
}

#[test]
fn classify_table_has_no_unknowns_up_to_four() {
    let (v, code) = json(&["classify", "--table", "4"]);
    assert_eq!(code, 0);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r["unknown"] == 0));
    let (v, _) = json(&["classify", "--table", "5", "--intervals-only"]);
    assert_eq!(v["rows"][4]["unknown"], 2);
}

#[test]
fn classify_builds_witnesses() {
    let (v, code) = json(&["classify", "10", "15", "--build"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["construction"]["verified"], true);
    assert_eq!(v["construction"]["cayley_bacharach"]["holds"], true);
}

#[test]
fn construct_examples() {
    let (v, code) = json(&["construct", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["class"]["q2"], 1);
    assert_eq!(v["class"]["s2"], 3);
    assert_eq!(v["surjectivity"]["surjective"], true);
    assert_eq!(v["pluecker_polys"].as_array().unwrap().len(), 6);
    assert_eq!(v["pluecker_polys"][0]["terms"]["(2,0,0)"], "1");
    let (v, _) = json(&["construct", "1", "2"]);
    assert_eq!((v["class"]["q2"].as_u64(), v["class"]["s2"].as_u64()), (Some(2), Some(7)));
    let (v, _) = json(&["construct", "2", "3"]);
    assert_eq!((v["class"]["q2"].as_u64(), v["class"]["s2"].as_u64()), (Some(6), Some(19)));
    assert_eq!(v["evidence"]["whitney"], true);
}

#[test]
fn construct_tangent() {
    let (v, code) = json(&["construct", "--tangent"]);
    assert_eq!(code, 0);
    assert_eq!((v["class"]["q2"].as_u64(), v["class"]["s2"].as_u64()), (Some(3), Some(6)));
    assert_eq!(v["split_class"], false);
}

#[test]
fn construct_rejects_zero_degree() {
    let out = run(&["construct", "0", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cb_check_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("collinear.json");
    std::fs::write(&path, r#"[[0, 1, 1], ["1/2", "3/2", 1], [2, 3, 1]]"#).unwrap();
    let (v, code) = json(&["cb-check", path.to_str().unwrap(), "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["holds"], true);

    let out = run_stdin(&["--format", "json", "cb-check", "-", "1"], "[[4, 1, -2]]");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["holds"], false);
    assert_eq!(v["report"]["certificate"]["degree"], 1);
    assert_eq!(v["report"]["certificate_verified"], true);

    let five = "[[1,0,0],[0,1,0],[0,0,1],[1,1,1],[1,2,3]]";
    let out = run_stdin(&["--format", "json", "cb-check", "-", "1"], five);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["report"]["holds"], true);
}

#[test]
fn cb_check_input_errors() {
    for bad in ["not json", "[[1,2]]", "[[1,2,3],[2,4,6]]", "[[0,0,0]]"] {
        let out = run_stdin(&["cb-check", "-", "1"], bad);
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
    assert_eq!(run(&["cb-check", "/nonexistent/points.json", "1"]).status.code(), Some(2));
}

#[test]
fn scans() {
    let (v, code) = json(&["scan", "1", "2", "31"]);
    assert_eq!(code, 0);
    let r = &v["reports"][0];
    assert_eq!(r["label"], "finite-field evidence");
    assert_eq!(r["fiber_histogram"].as_object().unwrap().keys().collect::<Vec<_>>(), ["1"]);
    let (v, _) = json(&["scan", "1", "1", "--prime", "31,101"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 2);
    let (v, _) = json(&["scan", "2", "2", "31"]);
    assert_eq!(v["reports"][0]["coprime_degrees"], false);
    let (v, _) = json(&["scan", "1", "2", "101", "--sample", "200"]);
    assert_eq!(v["reports"][0]["mode"]["mode"], "sample");
}

#[test]
fn scan_bad_prime_is_inconclusive() {
    let (v, code) = json(&["scan", "1", "1", "33"]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "bad-prime");
}

#[test]
fn genpoints_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pts.json");
    let (v, code) = json(&["--seed", "5", "genpoints", "7", "18", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["seed"], 5);
    assert_eq!(v["dualized"], false);
    assert_eq!(v["points"].as_array().unwrap().len(), 7);
    let (c, code) = json(&["cb-check", path.to_str().unwrap(), "2"]);
    assert_eq!(code, 0);
    assert_eq!(c["report"]["holds"], true);
}

#[test]
fn genpoints_without_point_witness() {
    assert_eq!(run(&["genpoints", "2", "7"]).status.code(), Some(2));
    assert_eq!(run(&["genpoints", "1", "15"]).status.code(), Some(2));
}

#[test]
fn json_output_is_deterministic() {
    for args in [&["genpoints", "12", "13"][..], &["construct", "1", "2"], &["classify", "--table", "6"]] {
        let a = run(&[&["--format", "json", "--seed", "3"][..], args].concat());
        let b = run(&[&["--format", "json", "--seed", "3"][..], args].concat());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verdicts_do_not_depend_on_the_seed() {
    let base = json(&["classify", "--table", "8"]).0["rows"].clone();
    for seed in ["1", "2", "3"] {
        assert_eq!(json(&["--seed", seed, "classify", "--table", "8"]).0["rows"], base);
    }
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["classify"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "classify", "1", "3"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--table", "0"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn human_output_echoes_the_seed() {
    let out = run(&["--seed", "42", "classify", "1", "3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("realizable"));
    assert!(text.trim_end().ends_with("seed 42"));
}

#[test]
fn verify_paper_passes() {
    let (v, code) = json(&["verify-paper"]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
