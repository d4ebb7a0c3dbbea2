//! End-to-end tests of the `hyperstats` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hyperstats"))
}

fn write_tmp(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hyperstats-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn exact_undirected_pin() {
    let path = write_tmp(
        "u.json",
        r#"{"type":"undirected","vertex_degrees":[2,1,1],"edge_degrees":[2,2]}"#,
    );
    let out = bin().args(["exact", "--input"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["statistics"]["degenerate"]["exact"]["num"], "1");
    assert_eq!(doc["statistics"]["degenerate"]["exact"]["den"], "3");
}

#[test]
fn exact_digraph_self_loops_equal_weak() {
    let path = write_tmp(
        "d.json",
        r#"{"type":"directed","out_degrees":[1,1],"in_degrees":[1,1],
            "tail_degrees":[1,1],"head_degrees":[1,1]}"#,
    );
    let out = bin()
        .args(["exact", "--stats", "s,ws", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(
        doc["statistics"]["self_loops"]["exact"],
        doc["statistics"]["weak_self_loops"]["exact"]
    );
}

#[test]
fn stub_mismatch_exits_2() {
    let path = write_tmp(
        "bad.json",
        r#"{"type":"undirected","vertex_degrees":[1,1],"edge_degrees":[3]}"#,
    );
    let out = bin().args(["exact", "--input"]).arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "StubMismatch");
}

#[test]
fn asymptotic_rejects_mixed_sizes() {
    let path = write_tmp(
        "mixed.json",
        r#"{"type":"undirected","vertex_degrees":[2,2,1],"edge_degrees":[3,2]}"#,
    );
    let out = bin()
        .args(["asymptotic", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "NotRegular");
}

#[test]
fn sample_reproducible_across_workers() {
    let path = write_tmp(
        "s.json",
        r#"{"type":"undirected","vertex_degrees":[2,2,1,1],"edge_degrees":[2,2,2]}"#,
    );
    let run = |workers: &str| {
        let out = bin()
            .args(["sample", "--samples", "400", "--seed", "11", "--workers", workers])
            .arg("--input")
            .arg(&path)
            .output()
            .unwrap();
        assert!(out.status.success());
        stdout_json(&out)["statistics"].clone()
    };
    let one = run("1");
    let eight = run("8");
    assert_eq!(
        one["degenerate"]["mc"]["mean"],
        eight["degenerate"]["mc"]["mean"]
    );
    assert_eq!(
        one["multi_pairs"]["mc"]["mean"],
        eight["multi_pairs"]["mc"]["mean"]
    );
}

#[test]
fn sample_needs_two_samples() {
    let path = write_tmp(
        "s1.json",
        r#"{"type":"undirected","vertex_degrees":[1,1],"edge_degrees":[2]}"#,
    );
    let out = bin()
        .args(["sample", "--samples", "1", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sample_dump_writes_per_sample_counts() {
    let path = write_tmp(
        "sd.json",
        r#"{"type":"undirected","vertex_degrees":[2,2],"edge_degrees":[2,2]}"#,
    );
    let dump = write_tmp("dump.csv", "");
    let out = bin()
        .args(["sample", "--samples", "25", "--seed", "4", "--workers", "1"])
        .arg("--input")
        .arg(&path)
        .arg("--dump")
        .arg(&dump)
        .output()
        .unwrap();
    assert!(out.status.success());
    let csv = std::fs::read_to_string(&dump).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "index,degenerate,multi_pairs");
    assert_eq!(lines.len(), 26);
}

#[test]
fn oracle_check_single_instance() {
    let path = write_tmp(
        "oc.json",
        r#"{"type":"undirected","vertex_degrees":[2,2],"edge_degrees":[2,2]}"#,
    );
    let out = bin()
        .args(["oracle-check", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("all equal"));
}

#[test]
fn oracle_check_oversized_exits_3() {
    let path = write_tmp(
        "big.json",
        r#"{"type":"undirected","vertex_degrees":[3,3,3],"edge_degrees":[3,3,3]}"#,
    );
    let out = bin()
        .args(["oracle-check", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "CapExceeded");
}

#[test]
fn identity_check_small_run() {
    let out = bin()
        .args(["identity-check", "--trials", "10", "--seed", "1", "--max-delta", "3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 failures"));
}

#[test]
fn sweep_csv_schema_and_divisibility() {
    let out = bin()
        .args(["sweep", "--n-list", "6,12", "--d", "3", "--delta", "3", "--stat", "dh"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "n,exact,asymptotic,ratio");
    assert_eq!(lines.count(), 2);

    let out = bin()
        .args(["sweep", "--n-list", "7", "--d", "3", "--delta", "5", "--stat", "dh"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "DivisibilityError");
}

#[test]
fn sweep_delta_one_ratio_is_one() {
    // DH is impossible at δ = 1: exact and asymptotic are both 0, ratio 1
    let out = bin()
        .args(["sweep", "--n-list", "10", "--d", "2", "--delta", "1", "--stat", "dh"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row, "10,0,0,1");
}

#[test]
fn gen_degrees_roundtrip() {
    let dir = std::env::temp_dir().join(format!("hyperstats-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (model, extra) in [
        ("regular", vec!["--d", "3"]),
        ("poisson", vec!["--lambda", "2.5"]),
        ("zipf", vec!["--alpha", "2.0"]),
    ] {
        let path = dir.join(format!("gen-{model}.json"));
        let out = bin()
            .args(["gen-degrees", "--model", model, "--n", "12", "--delta", "3", "--seed", "7"])
            .args(&extra)
            .arg("--out")
            .arg(&path)
            .output()
            .unwrap();
        assert!(out.status.success(), "{model}: {:?}", out);
        // generated file must validate and be computable
        let out = bin().args(["exact", "--input"]).arg(&path).output().unwrap();
        assert!(out.status.success(), "{model} roundtrip failed");
    }
    // directed generation
    let path = dir.join("gen-dir.json");
    let out = bin()
        .args([
            "gen-degrees", "--model", "poisson", "--n", "10", "--lambda", "2.0",
            "--delta", "2", "--delta-head", "2", "--seed", "3",
        ])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{:?}", out);
    let out = bin().args(["exact", "--input"]).arg(&path).output().unwrap();
    assert!(out.status.success());
}

#[test]
fn gen_degrees_divisibility_error() {
    let out = bin()
        .args(["gen-degrees", "--model", "regular", "--n", "4", "--d", "3", "--delta", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "DivisibilityError");
}

#[test]
fn workers_env_is_honored() {
    let path = write_tmp(
        "env.json",
        r#"{"type":"undirected","vertex_degrees":[2,2],"edge_degrees":[2,2]}"#,
    );
    let out = bin()
        .env("HYPERSTATS_WORKERS", "3")
        .args(["sample", "--samples", "50", "--seed", "1", "--input"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let doc = stdout_json(&out);
    assert_eq!(doc["metadata"]["inputs"]["workers"], 3);
}
