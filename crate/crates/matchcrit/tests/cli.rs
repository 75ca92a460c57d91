//! End-to-end tests of the binary: output text, JSON schemas, exit
//! codes, and the streaming interfaces.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_matchcrit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is utf8")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is utf8")
}

fn assert_exit(out: &Output, code: i32) {
    assert_eq!(
        out.status.code(),
        Some(code),
        "stdout: {} stderr: {}",
        stdout_of(out),
        stderr_of(out)
    );
}

#[test]
fn poly_family_text() {
    let out = run(&["poly", "--family", "W", "--n", "6"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "x^6-5x^4+4x^2\n");
}

#[test]
fn poly_g6_text() {
    let out = run(&["poly", "--g6", "A_"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "x^2-1\n");
}

#[test]
fn poly_strips_graph6_header() {
    let out = run(&["poly", "--g6", ">>graph6<<A_"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "x^2-1\n");
}

#[test]
fn poly_h1() {
    let out = run(&["poly", "--family", "H1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "x^5-5x^3+4x\n");
}

#[test]
fn poly_json_schema() {
    let out = run(&["poly", "--family", "W", "--n", "6", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["m"], 5);
    assert_eq!(v["mu"], "x^6-5x^4+4x^2");
    let coeffs: Vec<&str> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["0", "0", "4", "0", "-5", "0", "1"]);
    let counts: Vec<&str> = v["matching_counts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(counts, ["1", "5", "4", "0"]);
}

#[test]
fn poly_rejects_both_graph_sources() {
    let out = run(&["poly", "--g6", "A_", "--family", "W", "--n", "6"]);
    assert_exit(&out, 2);
}

#[test]
fn classify_k2_both_essential() {
    let out = run(&["classify", "--g6", "A_", "--theta", "x-1"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["is_root"], true);
    assert_eq!(v["multiplicity"], 1);
    assert_eq!(v["critical"], true);
    let classes = v["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 2);
    for c in classes {
        assert_eq!(c["kind"], "Essential");
        assert_eq!(c["special"], false);
    }
}

#[test]
fn classify_gstar_vector() {
    let out = run(&["classify", "--family", "Gstar", "--theta", "x^2-3"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["graph6"], "KzXc?CB_??_B");
    assert_eq!(v["multiplicity"], 1);
    assert_eq!(v["critical"], false);
    let classes = v["classes"].as_array().unwrap();
    let kinds: Vec<&str> = classes.iter().map(|c| c["kind"].as_str().unwrap()).collect();
    assert_eq!(
        kinds,
        [
            "Positive", "Positive", "Positive", "Neutral", "Neutral", "Neutral",
            "Essential", "Essential", "Essential", "Essential", "Essential", "Essential",
        ]
    );
    let special: Vec<bool> = classes.iter().map(|c| c["special"].as_bool().unwrap()).collect();
    assert_eq!(special, [true, false, false, false, false, false, false, false, false, false, false, false]);
}

#[test]
fn classify_rejects_non_monic_theta() {
    let out = run(&["classify", "--g6", "A_", "--theta", "2x-1"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("monic"));
}

#[test]
fn critical_bare_bool() {
    let out = run(&["critical", "--family", "W", "--n", "6", "--theta", "x-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "true\n");
}

#[test]
fn critical_disconnected_is_a_param_error() {
    let out = run(&["critical", "--g6", "C`", "--theta", "x-1"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("connected"));
}

#[test]
fn family_h2_code() {
    let out = run(&["family", "--family", "H2"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "Dl_\n");
}

#[test]
fn family_requires_order_when_parametric() {
    let out = run(&["family", "--family", "W"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("order"));
}

#[test]
fn family_hub_pattern() {
    let out = run(&["family", "--family", "Fhub", "--n", "7", "--pattern", "both,1,1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "F{E?G\n");
}

#[test]
fn pathtree_triangle() {
    let out = run(&["pathtree", "--g6", "Bw"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("nodes: 5"));
    assert!(text.contains("divisible: true"));
    assert!(text.contains("ratio_identity: true"));
    assert!(text.contains("quotient: x^2-1"));
}

#[test]
fn pathtree_root_out_of_range() {
    let out = run(&["pathtree", "--g6", "Bw", "--root", "3"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("out of range"));
}

#[test]
fn enum_connected_n4() {
    let out = run(&["enum", "connected", "--n", "4"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    let mut lines: Vec<&str> = text.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, ["Cq", "Cr", "Cs", "Cu", "Cv", "C~"]);
}

#[test]
fn enum_trees_filter_can_be_empty() {
    let out = run(&["enum", "trees", "--n", "7", "--filter-critical", "x-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "");
}

#[test]
fn enum_connected_n7_one_critical_count() {
    let out = run(&["enum", "connected", "--n", "7", "--filter-critical", "x-1"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out).lines().count(), 16);
}

#[test]
fn enum_native_order_is_bounded() {
    let out = run(&["enum", "connected", "--n", "10"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("--input"));
}

#[test]
fn enum_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    let output = dir.path().join("out.g6");
    std::fs::write(&input, ">>graph6<<Bw\n\nBo\n").unwrap();
    let out = run(&[
        "enum",
        "connected",
        "--input",
        input.to_str().unwrap(),
        "--output",
        output.to_str().unwrap(),
    ]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "");
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "Bw\nBo\n");
}

#[test]
fn enum_reads_stdin() {
    let mut child = bin()
        .args(["enum", "connected", "--input", "-", "--filter-critical", "x-1"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"A_\nBw\nBo\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_exit(&out, 0);
    // Only K_2 is 1-critical; K_3 and P_3 miss 1 as a root outright.
    assert_eq!(stdout_of(&out), "A_\n");
}

#[test]
fn enum_bad_line_reports_line_number() {
    let mut child = bin()
        .args(["enum", "connected", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"A_\n!!\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("line 2"));
}

#[test]
fn enum_json_collects() {
    let out = run(&["enum", "connected", "--n", "4", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 6);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 6);
}

#[test]
fn ntheta_sqrt2() {
    let out = run(&["ntheta", "--theta", "x^2-2"]);
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "n_theta: 3\nBo\n");
}

#[test]
fn ntheta_quartic_json() {
    let out = run(&["ntheta", "--theta", "x^4-5x^2+4", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["n_theta"], 5);
    let mut members: Vec<&str> = v["members"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m.as_str().unwrap())
        .collect();
    members.sort_unstable();
    assert_eq!(members, ["Dqg", "DsW"]);
    assert_eq!(v["anomalies"].as_array().unwrap().len(), 0);
}

#[test]
fn ntheta_not_found_is_a_param_error() {
    let out = run(&["ntheta", "--theta", "x^2-3", "--n-max", "2"]);
    assert_exit(&out, 2);
    assert!(stderr_of(&out).contains("order <= 2"));
}

#[test]
fn verify_summary_and_exit() {
    let out = run(&["verify", "thm3.1", "--n", "7"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("claim: multiplicity-bound"));
    assert!(text.contains("violations: 0"));
    assert!(text.contains("result: PASS"));
}

#[test]
fn verify_fig6_json_report() {
    let out = run(&["verify", "fig6", "--json"]);
    assert_exit(&out, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["claim"], "critical-census");
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 16);
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_unknown_claim_lists_known_ids() {
    let out = run(&["verify", "bogus"]);
    assert_exit(&out, 2);
    let err = stderr_of(&out);
    assert!(err.contains("multiplicity-bound"));
    assert!(err.contains("fig6"));
}

#[test]
fn verify_list() {
    let out = run(&["verify", "--list"]);
    assert_exit(&out, 0);
    let text = stdout_of(&out);
    assert!(text.contains("multiplicity-bound (alias thm3.1)"));
    assert!(text.contains("critical-census (alias fig6)"));
    assert!(text.contains("engine-oracle"));
}

#[test]
fn memo_cap_env_is_validated() {
    let out = bin()
        .args(["poly", "--g6", "A_"])
        .env("MATCHCRIT_MEMO_CAP", "abc")
        .output()
        .unwrap();
    assert_exit(&out, 0);
    assert_eq!(stdout_of(&out), "x^2-1\n");
    assert!(stderr_of(&out).contains("MATCHCRIT_MEMO_CAP"));
}
