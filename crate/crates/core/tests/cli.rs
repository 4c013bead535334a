use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ternalg::io::{fixture_files, parse_document, to_json, Document};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn fixture(name: &str) -> String {
    fixtures().join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ternalg"))
        .args(args)
        .env_remove("TERNALG_BUDGET_MS")
        .output()
        .expect("binary runs")
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn shipped_fixtures_are_current() {
    for (name, doc) in fixture_files() {
        let on_disk = std::fs::read_to_string(fixtures().join(name)).unwrap_or_default();
        assert_eq!(on_disk, to_json(&doc), "{name} is stale; run `cargo run --example write_fixtures`");
    }
}

#[test]
fn near_ring_passes_base_axioms() {
    let o = run(&["check", &fixture("nearring4.json"), "--axioms", "T1,T2,T3,T4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o).contains("all hold"));
}

#[test]
fn size_two_enumeration() {
    let o = run(&["--json", "enumerate", "--size", "2", "--axioms", "T1,T2,T3,T4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "census");
    assert_eq!(v["total"], 1);
    assert_eq!(v["complete"], true);
}

#[test]
fn eval_holds_on_boolean2() {
    let o = run(&["eval", "--identity", "p(a,b,a)=a", &fixture("boolean2.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o).starts_with("holds"));
}

#[test]
fn failures_exit_one_with_witness() {
    let file = fixture("l3.json");
    let o = run(&["check", &file, "--axioms", "T1,T4"]);
    assert_eq!(o.status.code(), Some(1));
    let out = text(&o);
    let rerun = out
        .lines()
        .find_map(|l| l.trim().strip_prefix("re-run: ternalg "))
        .expect("re-run line");
    let identity = rerun.split('"').nth(1).unwrap();
    let again = run(&["eval", "--identity", identity, &file]);
    assert_eq!(again.status.code(), Some(1));
    assert!(text(&again).contains("at a=0"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    let o = run(&["check", &fixture("l3.json"), "--axioms", "T1,T44"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("did you mean `T4`"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"kind\": \"lattice\", \"size\": 2}").unwrap();
    let o = run(&["derive", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown kind `lattice`"));

    assert_eq!(run(&["verify"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--identity", "p(a,b=a", &fixture("boolean2.json")]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn convert_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let sys = dir.path().join("sys.json");
    let o = run(&["convert", "--to", "ternary", &fixture("div12.json")]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::write(&sys, &o.stdout).unwrap();
    let back = run(&["convert", "--to", "de-morgan", sys.to_str().unwrap()]);
    assert_eq!(back.status.code(), Some(0));
    let original = std::fs::read_to_string(fixtures().join("div12.json")).unwrap();
    assert_eq!(parse_document(&text(&back)).unwrap(), parse_document(&original).unwrap());

    let o = run(&["convert", "--to", "de-morgan", &fixture("nearring4.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(text(&o).contains("T5DM"));
    let o = run(&["convert", "--to", "near-ring", &fixture("nearring4.json")]);
    assert!(matches!(parse_document(&text(&o)).unwrap(), Document::NearRing(_)));
}

#[test]
fn derive_and_classify() {
    let o = run(&["derive", &fixture("div6.json")]);
    let out = text(&o);
    for name in ["bar", "dot", "circ", "wedge", "vee", "plus"] {
        assert!(out.lines().any(|l| l.trim_start().starts_with(name)), "{name}");
    }
    let o = run(&["--json", "classify", &fixture("nearring4.json")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["t4"], true);
    assert_eq!(v["bc"], false);
    assert_eq!(v["label"], "near-ring-char2");
}

#[test]
fn verify_single_theorem_and_file() {
    let o = run(&["--json", "verify", "--theorem", "THM_6_6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "verified");

    let o = run(&["verify", "--theorem", "THM_3_2", "--file", &fixture("div12.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(text(&o).contains("consistent with the claim: yes"));
}

#[test]
fn budget_exhaustion_is_reported_not_verified() {
    let o = run(&["--json", "verify", "--theorem", "THM_4_1", "--max-size", "4", "--budget-nodes", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "incomplete");

    let o = Command::new(env!("CARGO_BIN_EXE_ternalg"))
        .args(["--json", "enumerate", "--size", "5", "--axioms", "T1,T2,T3,T4_1,T4_2,TMV", "--order", "lex"])
        .env("TERNALG_BUDGET_MS", "50")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complete"], false);

    let o = Command::new(env!("CARGO_BIN_EXE_ternalg"))
        .args(["enumerate", "--size", "2"])
        .env("TERNALG_BUDGET_MS", "soon")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn in_process_run_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let args = ["ternalg", "--json", "enumerate", "--size", "3", "--up-to-iso"];
    let code = ternalg::cli::run(args, &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, run(&args[1..]).stdout);
}
