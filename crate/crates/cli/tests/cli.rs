//! End-to-end tests against the compiled binary.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hilbert-zeta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn zeta_latex_contains_the_stable_tail() {
    let out = run(&["zeta", "--gens", "4,5,6", "--format", "latex"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.contains("1 + \\mathbb{L} + 2\\mathbb{L}^{2}+ 3\\mathbb{L}^{3}+ 2\\mathbb{L}^{4}"),
        "latex output:\n{text}"
    );
    assert!(text.contains("q^{8}"));
}

#[test]
fn check_reports_classification_and_bounds() {
    let out = run(&["check", "--gens", "4,5,6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Gamma_{4,3}"), "{text}");
    assert!(text.contains("conductor: 8"), "{text}");
    assert!(text.contains("effective bound: 42"), "{text}");
}

#[test]
fn non_coprime_generators_exit_1() {
    let out = run(&["zeta", "--gens", "6,10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn malformed_generators_exit_1() {
    assert_eq!(run(&["zeta", "--gens", "4,banana"]).status.code(), Some(1));
    assert_eq!(run(&["tree", "--gens", "1"]).status.code(), Some(1));
}

#[test]
fn json_output_round_trips_and_is_deterministic() {
    let first = run(&["zeta", "--gens", "4,5,6", "--format", "json"]);
    let second = run(&["zeta", "--gens", "4,5,6", "--format", "json"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let text = stdout(&first);
    let value: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(serde_json::to_string(&value).unwrap(), text.trim());
    assert_eq!(value["schema_version"], 1);
    assert_eq!(value["conductor"], 8);
    assert_eq!(value["zeta"]["tail"], serde_json::json!([1, 1, 2, 3, 2]));
}

#[test]
fn tree_formats() {
    let dot = run(&["tree", "--gens", "3,4", "--format", "dot"]);
    assert!(dot.status.success());
    let text = stdout(&dot);
    assert!(text.contains("digraph"));
    assert!(text.contains("(3,4)"));

    let json = run(&["tree", "--gens", "3,4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(value["conductor"], 6);
    assert_eq!(value["levels"][0][0]["min_gens"], serde_json::json!([3, 4]));
    // Level arrays and the root's empty parent row line up.
    assert_eq!(value["parents"][0], serde_json::json!([]));

    let latex = run(&["tree", "--gens", "3,4", "--format", "latex"]);
    assert_eq!(latex.status.code(), Some(1));
}

#[test]
fn bound_below_effective_needs_the_unsafe_flag() {
    let refused = run(&["zeta", "--gens", "4,5,6", "--bound", "30"]);
    assert_eq!(refused.status.code(), Some(2));

    // With the flag, 30 is still enough for every window of this tree; the
    // values match the certified run but the output is marked uncertified.
    let unsafe_run = run(&[
        "zeta",
        "--gens",
        "4,5,6",
        "--bound",
        "30",
        "--allow-unsafe-bound",
        "--format",
        "json",
    ]);
    assert!(unsafe_run.status.success());
    let value: serde_json::Value =
        serde_json::from_str(stdout(&unsafe_run).trim()).unwrap();
    assert_eq!(value["certified"], false);
    let certified = run(&["zeta", "--gens", "4,5,6", "--format", "json"]);
    let cert_value: serde_json::Value =
        serde_json::from_str(stdout(&certified).trim()).unwrap();
    assert_eq!(value["zeta"], cert_value["zeta"]);

    // Truncating harder starves the generator windows: exit 2.
    let starved = run(&[
        "zeta",
        "--gens",
        "4,5,6",
        "--bound",
        "10",
        "--allow-unsafe-bound",
    ]);
    assert_eq!(starved.status.code(), Some(2));
}

#[test]
fn oracle_verification_passes_on_good_trees() {
    let out = run(&["tree", "--gens", "3,4", "--oracle-verify"]);
    assert!(out.status.success());
    let z = run(&["zeta", "--gens", "2,5", "--oracle-verify", "--format", "json"]);
    assert!(z.status.success());
}

#[test]
fn format_comes_from_the_environment() {
    let out = bin()
        .args(["check", "--gens", "2,3"])
        .env("HILBERT_ZETA_FORMAT", "json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["classification"]["form"], "msb");
}

#[test]
fn reduction_is_reported() {
    let out = run(&["check", "--gens", "2,3,4", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(value["generators"], serde_json::json!([2, 3]));
    assert_eq!(value["reduced"], true);

    let text = run(&["zeta", "--gens", "2,3,4"]);
    assert!(stdout(&text).contains("reduced from input 2,3,4"));
}

#[test]
fn smooth_point_zeta() {
    let out = run(&["zeta", "--gens", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Z(q) = 1/(1-q)"));

    let json = run(&["zeta", "--gens", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    assert_eq!(value["zeta"]["poly"], serde_json::json!([]));
    assert_eq!(value["zeta"]["tail"], serde_json::json!([1]));
    assert_eq!(value["applicability"]["status"], "smooth");
}

#[test]
fn zeta_dot_annotates_classes() {
    let out = run(&["zeta", "--gens", "2,3", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2,3)\\n1"), "{text}");
    assert!(text.contains("(2)\\nL"), "{text}");
}
