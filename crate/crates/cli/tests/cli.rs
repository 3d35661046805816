//! End-to-end tests of the command-line interface and its exit codes.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_biplanar"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("biplanar-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn generate_tube_matches_expected_counts() {
    let out = run(&["generate", "--family", "tube", "--params", "k=3"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["n"], 16);
    assert_eq!(json["edges"].as_array().unwrap().len(), 40);
}

#[test]
fn generate_verify_round_trip() {
    let path = tmp("tube.json");
    let out = run(&[
        "generate",
        "--family",
        "tube",
        "--params",
        "k=3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&["verify", "--level", "5", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["passed"], true);

    // Re-import and re-export must be byte-identical (idempotence).
    let exported = run(&[
        "export",
        "--format",
        "json",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(exported.status.success());
    let original = std::fs::read(&path).unwrap();
    assert_eq!(exported.stdout, original);
    let again = run(&[
        "export",
        "--format",
        "json",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert_eq!(again.stdout, exported.stdout);
    std::fs::remove_file(&path).ok();
}

#[test]
fn analyze_reports_extremal_structure() {
    let path = tmp("box.json");
    assert!(run(&[
        "generate",
        "--family",
        "box",
        "--params",
        "k=2,n=2",
        "--out",
        path.to_str().unwrap(),
    ])
    .status
    .success());
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["is_quadrangulation"], true);
    assert_eq!(report["parity_conclusion"], true);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    std::fs::remove_file(&path).ok();
}

#[test]
fn beta_with_witness_name() {
    let out = run(&["beta", "--v", "7"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["beta"], 12);
    assert_eq!(report["witness_name"], "K_{3,4}");
    let out = run(&["beta", "--v", "6", "--exhaustive"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["exhaustive_confirmation"]["beta"], 9);
}

#[test]
fn decide_witness_and_refutation() {
    let graph = tmp("k33.json");
    std::fs::write(
        &graph,
        r#"{"n":6,"colors":[1,1,1,2,2,2],"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]}"#,
    )
    .unwrap();
    let out = run(&["decide", "--graph", graph.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "one_planar");
    assert_eq!(report["crossings"], 1);
    std::fs::remove_file(&graph).ok();

    let graph = tmp("k45.json");
    let k45_edges: Vec<Vec<usize>> = (0..4)
        .flat_map(|i| (0..5).map(move |j| vec![i, 4 + j]))
        .collect();
    std::fs::write(
        &graph,
        serde_json::json!({"n": 9, "colors": [1,1,1,1,2,2,2,2,2], "edges": k45_edges}).to_string(),
    )
    .unwrap();
    let out = run(&["decide", "--graph", graph.to_str().unwrap()]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["verdict"], "not_one_planar");
    std::fs::remove_file(&graph).ok();
}

#[test]
fn timeout_exit_code() {
    let graph = tmp("k44.json");
    let k44_edges: Vec<Vec<usize>> = (0..4)
        .flat_map(|i| (0..4).map(move |j| vec![i, 4 + j]))
        .collect();
    std::fs::write(
        &graph,
        serde_json::json!({"n": 8, "colors": [1,1,1,1,2,2,2,2], "edges": k44_edges}).to_string(),
    )
    .unwrap();
    let out = run(&[
        "decide",
        "--graph",
        graph.to_str().unwrap(),
        "--timeout",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&graph).ok();
}

#[test]
fn refute_k37_certificate() {
    let out = run(&["refute-k37"]);
    assert!(out.status.success());
    let cert: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cert["max_crossings"], 6);
    assert_eq!(cert["lower_bound_ceil"], 9);
    assert_eq!(cert["contradiction"], true);
}

#[test]
fn crbound_chain() {
    let out = run(&["crbound", "--chain", "3:1,5,7"]);
    assert!(out.status.success());
    let d: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let steps = d["steps"].as_array().unwrap();
    assert_eq!(steps[0]["resulting_lb"], 4);
    assert_eq!(steps[1]["resulting_lb"], 9);
}

#[test]
fn exit_codes_for_errors() {
    // Usage error.
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(64));
    // Validation failure: malformed drawing.
    let path = tmp("bad.json");
    std::fs::write(&path, "{\"n\": 2}").unwrap();
    let out = run(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_file(&path).ok();
    // Verify failure on an invalid level.
    let out = run(&["verify", "--level", "9", "whatever.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn svg_and_dot_exports() {
    let path = tmp("k36.json");
    assert!(run(&[
        "generate",
        "--family",
        "kab",
        "--params",
        "a=3,b=6",
        "--out",
        path.to_str().unwrap(),
    ])
    .status
    .success());
    let svg = run(&[
        "export",
        "--format",
        "svg",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(svg.status.success());
    assert!(String::from_utf8_lossy(&svg.stdout).starts_with("<svg"));
    let dot = run(&[
        "export",
        "--format",
        "dot",
        "--input",
        path.to_str().unwrap(),
    ]);
    assert!(dot.status.success());
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("graph drawing {"));
    std::fs::remove_file(&path).ok();
}
