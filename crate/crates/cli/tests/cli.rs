use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_k3-quartic-lab"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}\n{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn ledger(v: &Value) -> &Vec<Value> {
    v["verificationLedger"].as_array().unwrap()
}

#[test]
fn analyze_special_alpha() {
    let (code, v) = run_json(&["analyze", "81/49"]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["stability"]["verdict"], "Stable");
    let types: Vec<&str> = r["fibration"]["fibers"].as_array().unwrap().iter().map(|f| f["type"].as_str().unwrap()).collect();
    assert_eq!(types, ["I0*", "III*", "III"]);
    assert_eq!(r["fibration"]["fibers"][0]["places"], 2);
    assert_eq!(r["fibration"]["total_euler"], 24);
    assert_eq!(r["fibration"]["picard_bound"]["shioda_tate_bound"], 18);
    assert_eq!(r["fibration"]["with_known_section"]["parity_refined"], 20);
    assert!(ledger(&v).iter().all(|e| e["pass"] == true));
}

#[test]
fn analyze_mw_rank_flag() {
    let (code, v) = run_json(&["analyze", "--alpha", "5/1", "--mw-rank", "1"]);
    assert_eq!(code, 0);
    let b = &v["results"]["fibration"]["picard_bound"];
    assert_eq!(b["shioda_tate_bound"], 19);
    assert_eq!(b["parity_refined"], 20);
}

#[test]
fn analyze_tacnode_is_a_verdict() {
    let (code, v) = run_json(&["analyze", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["stability"]["verdict"], "Unstable");
    assert_eq!(v["results"]["stability"]["reason"], "tacnode");
    assert_eq!(v["results"]["fibration"]["status"], "skipped");
    let (code, v) = run_json(&["analyze", "inf"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["stability"]["verdict"], "Unstable");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["analyze", "abc"]).status.code(), Some(2));
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["lattice", "invariants", "--preset", "X9"]).status.code(), Some(2));
    assert_eq!(run(&["lattice", "tn", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["moduli", "--check", "everything"]).status.code(), Some(2));
    assert_eq!(run(&["split", "--alpha", "81/49", "--param", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn fibers_generic_and_twisted() {
    let (code, v) = run_json(&["fibers"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["total_euler"], 24);
    assert_eq!(v["results"]["picard_bound"]["shioda_tate_bound"], 18);
    let (code, v) = run_json(&["fibers", "--alpha", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["twist_multiplier"], "lambda + 1");
}

#[test]
fn lattice_commands() {
    let (code, v) = run_json(&["lattice", "invariants", "--preset", "N"]);
    assert_eq!(code, 0);
    let inv = &v["results"]["invariants"];
    assert_eq!(inv["rank"], 18);
    assert_eq!(inv["signature"], serde_json::json!([1, 17]));
    assert_eq!(inv["ell"], 4);
    assert_eq!(inv["delta"], 1);
    let (code, v) = run_json(&["lattice", "tn", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["gram"], serde_json::json!([[14, 0], [0, 14]]));
    let (code, v) = run_json(&["lattice", "tn", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["status"], "obstructed");
    assert_eq!(v["results"]["search"]["primitive"], 0);
}

#[test]
fn split_files() {
    let psi = data("psi.json");
    let (code, v) = run_json(&["split", "--alpha", "81/49", "--param", psi.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"], "Splits");
    let mults: Vec<u64> = v["results"]["factors"].as_array().unwrap().iter().map(|f| f["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, [4, 4, 4]);
    let zeta = data("zeta.json");
    let (_, v) = run_json(&["split", "--alpha", "81/49", "--param", zeta.to_str().unwrap()]);
    assert_eq!(v["results"]["verdict"], "Splits");
    let line = data("line.json");
    let (code, v) = run_json(&["split", "--alpha", "81/49", "--param", line.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["verdict"], "DoesNotSplit");
}

#[test]
fn cm_on_special_beta() {
    let (code, v) = run_json(&["cm", "--beta4", "7/9", "--precision", "128"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["j_exact"], "1728");
    assert_eq!(v["results"]["cm"]["verdict"], "IsogenousToE");
    assert_eq!(v["results"]["cm"]["conductor"], 1);
    // β⁴ = 1 makes E_β singular.
    assert_eq!(run(&["cm", "--beta4", "1"]).status.code(), Some(1));
}

#[test]
fn moduli_and_named_suites_pass() {
    for args in [&["moduli", "--check", "all"][..], &["verify", "fricke"], &["verify", "cover"], &["verify", "numeric"]] {
        let (code, v) = run_json(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(ledger(&v).iter().all(|e| e["pass"] == true));
    }
    let (_, v) = run_json(&["verify", "cover"]);
    assert_eq!(ledger(&v).len(), 2);
}

#[test]
fn verify_all_reports_the_rank_four_failure() {
    let (code, v) = run_json(&["verify", "all"]);
    assert_eq!(code, 1);
    let failed: Vec<&Value> = ledger(&v).iter().filter(|e| e["pass"] == false).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0]["check"].as_str().unwrap().starts_with("rank four"));
    assert!(failed[0]["witness"].as_str().unwrap().contains("142 solutions"));
    assert!(ledger(&v).len() >= 20);
}

#[test]
fn reports_are_byte_stable() {
    let a = run(&["analyze", "81/49", "--json"]).stdout;
    let b = run(&["analyze", "81/49", "--json"]).stdout;
    assert_eq!(a, b);
    let a = run(&["verify", "all", "--json"]).stdout;
    let b = run(&["verify", "all", "--json"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn report_file_is_written() {
    let dir = std::env::temp_dir().join(format!("k3-lab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&["lattice", "tn", "--n", "4", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["results"]["status"], "realized");
    assert_eq!(v["command"][0], "lattice");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn summary_lines() {
    let out = run(&["verify", "cover"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS pencil substitution"));
    assert!(text.contains("2/2 checks passed"));
}
