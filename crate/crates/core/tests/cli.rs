//! End-to-end tests of the command-line interface: output shapes, the
//! graph6 corpus ingestion path, and the exit-code contract.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lexdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> serde_json::Value {
    assert!(output.status.success(), "stderr: {}", String::from_utf8_lossy(&output.stderr));
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("lexdom-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).expect("temp file writes");
    path
}

#[test]
fn invariant_reports_value_witness_and_count() {
    let out = stdout_json(&lexdom(&[
        "invariant", "--graph", "path:6", "--kind", "gx2", "--witness", "--all-min",
    ]));
    assert_eq!(out["value"], 5);
    assert_eq!(out["witness"].as_array().unwrap().len(), 5);
    assert!(out["count"].as_u64().unwrap() >= 1);
}

#[test]
fn invariant_reports_infeasibility() {
    let out = stdout_json(&lexdom(&["invariant", "--graph", "empty:3", "--kind", "gt"]));
    assert!(out["infeasible"].as_str().unwrap().contains("isolated"));
    assert!(out.get("value").is_none());
}

#[test]
fn invariant_accepts_graph6_input() {
    let out = stdout_json(&lexdom(&["invariant", "--graph", "A_", "--kind", "gx2"]));
    assert_eq!(out["value"], 2);
}

#[test]
fn product_emits_graph6_line_and_sidecar() {
    let out = lexdom(&["product", "--g", "path:7", "--h", "path:4", "--emit", "graph6"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let g6 = lines.next().unwrap();
    let parsed = lexdom::graph::parse_graph6(g6).unwrap();
    assert_eq!(parsed.n(), 28);
    let sidecar: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(sidecar["n_g"], 7);
    assert_eq!(sidecar["n_h"], 4);
    assert_eq!(sidecar["encoding"], "row-major");
}

#[test]
fn formula_and_bounds_report_provenance() {
    let out = stdout_json(&lexdom(&["formula", "--g", "path:7", "--h", "family:path:4"]));
    assert_eq!(out["value"], 6);
    assert_eq!(out["rule"], "path-h-domination-2");

    let out = stdout_json(&lexdom(&["bounds", "--g", "cycle:4", "--h", "empty:2"]));
    assert_eq!(out["lower"], 3);
    assert_eq!(out["upper"], 4);
    assert!(out["applied"].as_array().unwrap().len() >= 4);
}

#[test]
fn construct_validates_its_witness() {
    let out = stdout_json(&lexdom(&[
        "construct", "--scheme", "path-g2", "--n", "7", "--h", "family:path:4",
    ]));
    assert_eq!(out["cardinality"], 6);
    assert_eq!(out["claimed_cardinality"], 6);
    assert_eq!(out["valid"], true);

    let out = stdout_json(&lexdom(&[
        "construct", "--scheme", "hk", "--k", "4", "--blocks", "3,2,3,2",
    ]));
    assert_eq!(out["cardinality"], 4);
    assert_eq!(out["valid"], true);
}

#[test]
fn verify_passes_on_a_small_config() {
    let config = temp_file(
        "small.cfg",
        "single_max=3\npair_g_max=3\npair_h_max=2\ngrid_max=4\n",
    );
    let out = lexdom(&[
        "verify", "--check", "V4", "--config", config.to_str().unwrap(), "--format", "json",
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["id"], "V4");
    assert_eq!(reports[0]["verdict"], "pass");
}

#[test]
fn verify_ingests_graph6_corpus_files() {
    // stars and one path, one graph per line
    let corpus = temp_file("corpus.g6", "A_\nCr\nD?{\nB_\n");
    let config = temp_file("ingest.cfg", "pair_h_max=2\n");
    let out = lexdom(&[
        "verify",
        "--check",
        "V1",
        "--corpus",
        corpus.to_str().unwrap(),
        "--config",
        config.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    // K2, C4 and the star are eligible; B_ has an isolated vertex
    assert!(text.contains("V1"), "{text}");
    assert!(text.contains(",3,1,pass,"), "{text}");
}

#[test]
fn hunt_reports_equality_graphs() {
    let out = stdout_json(&lexdom(&["hunt", "--nmax", "3"]));
    let entries = out.as_array().unwrap();
    // K2 attains the equality with value 2
    assert!(entries
        .iter()
        .any(|e| e["graph6"] == "A_" && e["value"] == 2));
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = lexdom(&["invariant", "--graph", "path:6", "--kind", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lexdom(&["invariant", "--graph", "path:0", "--kind", "gx2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lexdom(&["verify", "--check", "V99"]);
    assert_eq!(out.status.code(), Some(2));
    let out = lexdom(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn worker_count_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_lexdom"))
        .env("LEXDOM_WORKERS", "2")
        .args(["invariant", "--graph", "cycle:7", "--kind", "gx2"])
        .output()
        .expect("binary runs");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["value"], 5);
}
