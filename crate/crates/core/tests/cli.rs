use std::io::Write as _;

use scc_range::cli::{execute, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    run_with_stdin(args, "")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("scc-range").chain(args.iter().copied());
    let code = execute(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

const PARADOX: &str = "3 3\n0 1 2\n1 2 0\n2 0 1\n";

fn profile_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn eval_copeland_on_paradox() {
    let f = profile_file(PARADOX);
    let r = run(&["eval", "--rule", "copeland", "--profile", f.path().to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("choice: {0,1,2}"), "{}", r.out);
    assert!(r.out.contains("scores: 1 1 1"), "{}", r.out);
}

#[test]
fn eval_reads_stdin_and_emits_json() {
    let r = run_with_stdin(&["eval", "--rule", "borda", "--profile", "-", "--format", "json"], PARADOX);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["choice"], serde_json::json!([0, 1, 2]));
    assert_eq!(v["scores"], serde_json::json!([6, 6, 6]));
}

#[test]
fn eval_approval_needs_ballots() {
    let f = profile_file(PARADOX);
    let path = f.path().to_str().unwrap();
    let r = run(&["eval", "--rule", "approval", "--profile", path]);
    assert_eq!(r.code, EXIT_USAGE);
    let r = run(&["eval", "--rule", "approval", "--profile", path, "--ballots", "1,1,2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("choice: {0}"), "{}", r.out);
    assert!(r.out.contains("scores: 2 1 1"), "{}", r.out);
}

#[test]
fn construct_copeland_infeasible_size() {
    let r = run(&["construct", "--rule", "copeland", "-m", "4", "-n", "3", "--size", "4"]);
    assert_eq!(r.code, EXIT_INFEASIBLE);
    assert!(r.err.contains("m even: size m infeasible"), "{}", r.err);
}

#[test]
fn construct_round_trips_through_eval() {
    for (rule, set) in [("borda", "0,2"), ("top-cycle", "1,2,3"), ("copeland", "1,3"), ("maximin", "2")] {
        let r = run(&["construct", "--rule", rule, "-m", "4", "-n", "4", "--set", set, "--format", "json"]);
        assert_eq!(r.code, EXIT_OK, "{rule}: {}", r.err);
        let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
        let f = profile_file(v["profile"].as_str().unwrap());
        let e = run(&["eval", "--rule", rule, "--profile", f.path().to_str().unwrap(), "--format", "json"]);
        let w: serde_json::Value = serde_json::from_str(&e.out).unwrap();
        assert_eq!(w["choice"], v["choice"], "{rule}");
        let want: Vec<usize> = set.split(',').map(|x| x.parse().unwrap()).collect();
        assert_eq!(v["choice"], serde_json::json!(want), "{rule}");
    }
}

#[test]
fn construct_approval_prints_ballots() {
    let r = run(&["construct", "--rule", "approval", "-m", "6", "-n", "10", "--size", "4"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("ballots: 2,2,1,1,1,1,1,1,1,1"), "{}", r.out);
}

#[test]
fn set_and_size_are_exclusive() {
    let r = run(&["construct", "--rule", "borda", "-m", "4", "-n", "2", "--set", "0", "--size", "1"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("--set") || r.err.contains("--size"), "{}", r.err);
}

#[test]
fn unknown_rule_names_the_flag() {
    let r = run(&["eval", "--rule", "kemeny", "--profile", "-"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.err.contains("--rule"), "{}", r.err);
}

#[test]
fn range_is_deterministic() {
    let args = ["range", "--rule", "top-cycle", "-m", "4", "-n", "3", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.code, EXIT_OK, "{}", a.err);
    assert_eq!(a.out, b.out);
    let v: serde_json::Value = serde_json::from_str(&a.out).unwrap();
    assert_eq!(v["sizes"], serde_json::json!([1, 3, 4]));
}

#[test]
fn range_guard_is_a_usage_error() {
    let r = run(&["range", "--rule", "borda", "-m", "7", "-n", "2"]);
    assert_eq!(r.code, EXIT_USAGE);
}

#[test]
fn verify_small_checklist() {
    let r = run(&["verify", "--m-max", "4", "--n-max", "4"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.out);
    assert!(!r.out.contains("FAIL"));
}

#[test]
fn min_gauge_example() {
    let r = run(&["min-gauge", "-m", "4", "-n", "2", "--size", "3", "--format", "json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["min_gauge"], 2);
}

#[test]
fn verify_default_checklist() {
    let r = run(&["verify", "--format", "json"]);
    assert_eq!(r.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    let claims = v["claims"].as_array().unwrap();
    assert!(claims.len() > 200);
    assert!(claims.iter().all(|c| c["pass"] == true));
}
