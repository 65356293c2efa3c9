use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn halin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halin")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn even_wheel_needs_four_colors() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("w6.json");
    let dot = dir.path().join("w6.dot");
    assert_eq!(
        halin(&["generate", "--variant", "wheel", "--n", "6", "--out", path_str(&graph)]).status.code(),
        Some(0)
    );
    let out = halin(&["color", "--in", path_str(&graph), "--dot", path_str(&dot)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["num_colors"], 4);
    assert!(std::fs::read_to_string(&dot).unwrap().starts_with("graph"));
}

#[test]
fn generated_halin_is_recognized() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("h10.json");
    let cert = dir.path().join("cert.json");
    halin(&["generate", "--variant", "halin", "--n", "10", "--seed", "7", "--out", path_str(&graph)]);
    let out = halin(&["recognize", "--in", path_str(&graph), "--emit-certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["halin"], true);

    let out = halin(&["color", "--in", path_str(&graph), "--certificate", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["num_colors"], 3);
}

#[test]
fn pipeline_outputs_feed_the_verifier() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.json");
    let coloring = dir.path().join("coloring.json");
    let order = dir.path().join("order.json");
    let filled = dir.path().join("filled.json");
    halin(&["generate", "--variant", "halin-cubic", "--n", "12", "--seed", "3", "--out", path_str(&graph)]);

    let out = halin(&["color", "--in", path_str(&graph)]);
    std::fs::write(&coloring, &out.stdout).unwrap();
    let out = halin(&["verify", "--in", path_str(&graph), "--mode", "coloring", "--coloring", path_str(&coloring)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["chromatic_number"], 3);

    let out = halin(&["peo", "--in", path_str(&graph), "--emit-completion", path_str(&filled)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["order"].as_array().unwrap().len(), 12);
    std::fs::write(&order, &out.stdout).unwrap();
    let out = halin(&["verify", "--in", path_str(&graph), "--mode", "peo", "--order", path_str(&order)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["chordal_completion"], true);

    assert_eq!(halin(&["verify", "--in", path_str(&filled), "--mode", "chordal"]).status.code(), Some(0));
    assert_eq!(halin(&["verify", "--in", path_str(&graph), "--mode", "chordal"]).status.code(), Some(1));
}

#[test]
fn non_halin_input_is_a_negative_decision() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k5.json");
    let edges: Vec<[usize; 2]> = (0..5).flat_map(|u| (u + 1..5).map(move |v| [u, v])).collect();
    std::fs::write(&graph, serde_json::json!({ "n": 5, "edges": edges }).to_string()).unwrap();
    let out = halin(&["recognize", "--in", path_str(&graph)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["halin"], false);
    assert_eq!(halin(&["color", "--in", path_str(&graph)]).status.code(), Some(1));
}

#[test]
fn missing_or_malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(halin(&["color", "--in", path_str(&missing)]).status.code(), Some(2));

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n": 3, "edges": [], "extra": 1}"#).unwrap();
    assert_eq!(halin(&["recognize", "--in", path_str(&bad)]).status.code(), Some(2));
    assert_eq!(halin(&["generate", "--variant", "necklace", "--n", "7"]).status.code(), Some(2));
    assert_eq!(halin(&["verify", "--in", path_str(&bad), "--mode", "coloring"]).status.code(), Some(2));
    assert_eq!(halin(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn empty_bench_schedule_gives_empty_report() {
    let out = halin(&["bench", "--schedule", "", "--algo", "peo"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["points"], serde_json::json!([]));
    assert_eq!(report["slope"], Value::Null);
}

#[test]
fn small_bench_reports_each_size() {
    let out = halin(&["bench", "--schedule", "200,400", "--variant", "necklace", "--graphs", "1", "--samples", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["points"].as_array().unwrap().len(), 2);
    assert!(report["slope"].is_number());
}
