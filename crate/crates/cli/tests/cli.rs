//! End-to-end checks of the binary: outputs, exit codes, determinism.

use std::io::Write;
use std::process::{Command, Output};

fn normforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normforge"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn write_temp(contents: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    file.write_all(contents.as_bytes()).expect("write");
    file
}

#[test]
fn norm1_renders_exact_ratio() {
    let out = normforge(&["norm1", "--F", "2", "--G", "4", "--set", "[0,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"norm\":\"2/3\"}");
}

#[test]
fn norm2_reports_witness() {
    let family = write_temp("{\"universe\":4,\"sets\":[[0,1],[2,3]]}");
    let out = normforge(&[
        "norm2",
        "--n",
        "1",
        "--G",
        "4",
        "--family",
        family.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "{\"norm\":2,\"witness\":[0,2]}");
}

#[test]
fn norm3_triangle_with_witness() {
    let family = write_temp("{\"universe\":3,\"sets\":[[0,1],[1,2],[0,2]]}");
    let out = normforge(&[
        "norm3",
        "--family",
        family.path().to_str().unwrap(),
        "--witness",
        "--oracle-check",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).expect("JSON output");
    assert_eq!(value["norm"], 2);
    assert_eq!(value["oracle"], 2);
    assert_eq!(value["partition"], serde_json::json!([[0], [1], [2]]));
}

#[test]
fn norm4_and_hall_pipeline() {
    let functions = write_temp("{\"N\":3,\"functions\":[\"000\",\"100\",\"010\",\"001\"]}");
    let out = normforge(&[
        "norm4",
        "--functions",
        functions.path().to_str().unwrap(),
        "--witness",
    ]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON");
    assert_eq!(value["norm"], 2);

    let out = normforge(&["hall", "delta", "--functions", functions.path().to_str().unwrap()]);
    assert!(out.status.success());
    let pfns = write_temp(&stdout(&out));
    let out = normforge(&["hall", "D", "--pfns", pfns.path().to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "{\"N\":3,\"functions\":[\"000\",\"100\",\"010\",\"001\"]}"
    );

    let out = normforge(&["hall", "hn", "--pfns", pfns.path().to_str().unwrap()]);
    assert!(out.status.success());
    let out_hn = normforge(&["hall", "HN", "--pfns", pfns.path().to_str().unwrap()]);
    assert!(out_hn.status.success());
}

#[test]
fn refute_baju_exits_one_with_exact_fields() {
    let out = normforge(&["refute-baju", "--n", "1", "--G", "8", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1), "counterexample-found semantics");
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON");
    assert_eq!(value["miss_product"], "3/14");
    assert_eq!(value["threshold"], "1/4");
    assert_eq!(value["ratio"], "11/14");
    assert_eq!(value["norm"], 2);
    assert_eq!(value["refuted"], true);
}

#[test]
fn kgon_mismatch_exits_one() {
    let out = normforge(&["kgon", "--N", "4", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON");
    assert_eq!(value["exact"], 4);
    assert_eq!(value["stated"], 3);

    let out = normforge(&["kgon", "--N", "6", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn verify_suite_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--suite",
        "hall.thm6.30",
        "--N",
        "6",
        "--seed",
        "1",
        "--cases",
        "200",
    ];
    let a = normforge(&args);
    assert_eq!(a.status.code(), Some(0));
    let b = normforge(&args);
    assert_eq!(stdout(&a), stdout(&b), "same invocation, same bytes");

    // Worker count changes wall time only.
    let mut with_jobs = vec!["--jobs", "2"];
    with_jobs.extend_from_slice(&args);
    let c = normforge(&with_jobs);
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn verify_unknown_suite_is_usage_error() {
    let out = normforge(&["verify", "--suite", "no.such"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_family_is_input_error() {
    let family = write_temp("{\"universe\":4,\"sets\":[[0,4]]}");
    let out = normforge(&[
        "norm2",
        "--n",
        "1",
        "--G",
        "4",
        "--family",
        family.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("element 4 >= universe 4"), "stderr: {err}");
}

#[test]
fn budget_exceeded_exits_three() {
    let family = write_temp("{\"universe\":24,\"sets\":[]}");
    let out = normforge(&[
        "bridge",
        "subset",
        "--n",
        "1",
        "--N",
        "24",
        "--family",
        family.path().to_str().unwrap(),
    ]);
    // Hall norm over 24 points is far beyond every budget.
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn pstar_scan_finds_the_known_violation() {
    let out = normforge(&["bridge", "pstar-scan", "--N", "2", "--budget", "65536"]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON");
    assert!(value["violations"].as_u64().unwrap() > 0);
}

#[test]
fn report_lists_standing_discrepancies() {
    let out = normforge(&["report"]);
    assert_eq!(out.status.code(), Some(1));
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("JSON");
    assert_eq!(value["discrepancies"].as_array().unwrap().len(), 5);

    let out = normforge(&["--format", "csv", "report"]);
    let text = stdout(&out);
    assert!(text.starts_with("suite,cases,violations,discrepancies,status\n"));
}

#[test]
fn scan_kgon_emits_csv() {
    let out = normforge(&["scan", "kgon", "--max-N", "7"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("N,k,exact,stated,matches\n"));
    assert!(text.contains("4,2,4,3,false"));
    assert!(text.contains("7,3,4,3,false"));
}
