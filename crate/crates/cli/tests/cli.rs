//! End-to-end runs of the `loopforge` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const D8: &str = "format perm 4\n(0 1)(2 3)\n(1 2)\n";
const Q8: &str = "format perm 8\n(0 1 2 3)(4 5 6 7)\n(0 4 2 6)(1 7 3 5)\n";
const C3_WR_C2: &str = "format perm 6\n(0 1 2)\n(0 3)(1 4)(2 5)\n";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_loopforge"));
    c.env_remove("LOOPFORGE_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn d8_has_two_invariant_transversals() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "d8.grp", D8);
    let out = run(&["enumerate", "--group", g.to_str().unwrap(), "--subgroup", "1", "--count"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["result"]["transversals"].as_array().unwrap().len(), 2);
    assert_eq!(v["result"]["generating"], serde_json::json!([false, false]));
    assert_eq!(v["command"], "enumerate");
}

#[test]
fn q8_over_its_centre_has_none() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "q8.grp", Q8);
    let out = run(&["enumerate", "--group", g.to_str().unwrap(), "--subgroup-center"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["result"]["transversals"].as_array().unwrap().is_empty());
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["enumerate", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["enumerate", "--group", "/nonexistent/x.grp", "--subgroup", "1"]).status.code(), Some(2));
    let dir = TempDir::new().unwrap();
    let bad = write(dir.path(), "bad.grp", "format perm 3\n(0 1\n");
    assert_eq!(run(&["enumerate", "--group", bad.to_str().unwrap(), "--subgroup", "1"]).status.code(), Some(2));
    let g = write(dir.path(), "d8.grp", D8);
    assert_eq!(run(&["--max-order", "4", "enumerate", "--group", g.to_str().unwrap(), "--subgroup", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--budget", "0", "catalog"]).status.code(), Some(2));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "w.grp", C3_WR_C2);
    let args = ["enumerate", "--group", g.to_str().unwrap(), "--subgroup", "1", "--require-generating"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let (a, b) = (run(&["verify-conjecture", "--catalog-max", "20"]), run(&["verify-conjecture", "--catalog-max", "20"]));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn budget_comes_from_flag_then_environment() {
    let out = bin().env("LOOPFORGE_BUDGET", "1234").args(["catalog", "--max", "4"]).output().unwrap();
    assert_eq!(json(&out)["config"]["searchNodeBudget"], 1234);
    let out = bin().env("LOOPFORGE_BUDGET", "1234").args(["--budget", "99", "catalog", "--max", "4"]).output().unwrap();
    assert_eq!(json(&out)["config"]["searchNodeBudget"], 99);
    let out = bin().env("LOOPFORGE_BUDGET", "lots").args(["catalog"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn emitted_files_are_read_back() {
    let dir = TempDir::new().unwrap();
    let g = write(dir.path(), "w.grp", C3_WR_C2);
    let out_dir = dir.path().join("out");
    let out = run(&[
        "--out-dir",
        out_dir.to_str().unwrap(),
        "--format",
        "json",
        "--format",
        "text",
        "enumerate",
        "--group",
        g.to_str().unwrap(),
        "--subgroup",
        "1",
        "--require-generating",
        "--limit",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    for f in ["enumerate.json", "enumerate.txt", "group.grp", "transversal_0.folder"] {
        assert!(out_dir.join(f).exists(), "{f} not written");
    }
    let folder = out_dir.join("transversal_0.folder");
    let loop_dir = dir.path().join("loop");
    let out = run(&["--out-dir", loop_dir.to_str().unwrap(), "folder", folder.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["envelopeRoundtrip"], true);
    assert_eq!(v["result"]["order"], 6);
    let out = run(&["loop", loop_dir.join("folder.loop").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["result"]["rightMultiplicationGroupOrder"], 18);
    assert_eq!(v["result"]["associative"], false);

    let out = run(&["analyze-pq", "--folder", folder.to_str().unwrap(), "--p", "3", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["result"]["groupOrder"], 18);
    assert!(!v["result"]["analyses"].as_array().unwrap().is_empty());
}

#[test]
fn conjecture_sweep_reports_no_counterexample() {
    let dir = TempDir::new().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&["verify-conjecture", "--catalog-max", "25", "--out", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["result"]["totalCounterexamples"], 0);
    assert!(v["result"]["covered"].as_array().unwrap().iter().any(|n| n == "S4"));
}

#[test]
fn catalog_lists_every_group() {
    let out = run(&["--format", "csv", "catalog", "--max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.contains("Q8")));
    let out = run(&["catalog", "--max", "16"]);
    assert_eq!(json(&out)["result"]["groups"].as_array().map(|a| a.len()), Some(42));
}
