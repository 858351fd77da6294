//! End-to-end runs of the `wreathdet` binary.

use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathdet")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn det_examples() {
    for (text, label) in [("1;1", "-zeta^1"), ("2;", "1"), (";2", "zeta^1"), ("1,1;", "-1")] {
        let out = run(&["det", text]);
        assert_eq!(code(&out), 0);
        assert!(stdout(&out).starts_with(&format!("det: {label}\n")), "{text}: {}", stdout(&out));
    }
}

#[test]
fn det_check_agrees() {
    let out = run(&["det", "2,1;;1", "--check"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("eigenvalue route") && stdout(&out).contains("agrees"));
}

#[test]
fn det_json_is_structured() {
    let out = run(&["det", "1;1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["det"], "-zeta^1");
}

#[test]
fn table_r2_rows() {
    let out = run(&["table", "--r", "2", "--n", "6"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,r,scope,N_1,N_zeta_1,N_negzeta_1,N_neg1,total");
    assert_eq!(lines[6], "6,2,all,33,8,16,8,65");
}

#[test]
fn table_small_rows() {
    let out = run(&["table", "--r", "3", "--n", "2"]);
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, ["1,3,all,1,1,1,0,0,0,3", "2,3,all,1,1,1,2,2,2,9"]);
    let out = run(&["table", "--r", "7", "--n", "1"]);
    assert_eq!(stdout(&out).lines().nth(1).unwrap(), "1,7,all,1,1,1,1,1,1,1,0,0,0,0,0,0,0,7");
}

#[test]
fn table_check_reports_documented_published_cells() {
    let out = run(&["table", "--r", "2", "--n", "10", "--check"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("n=10 N_zeta_1: 32 vs computed 16 (listed in errata)"));
    let strict = run(&["table", "--r", "2", "--n", "10", "--check", "--strict-paper"]);
    assert_eq!(code(&strict), 0, "{}", stderr(&strict));
}

#[test]
fn table_writes_plot_next_to_output() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("r2.csv");
    let out = run(&["table", "--r", "2", "--n", "6", "--out", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let table = std::fs::read_to_string(&out_path).unwrap();
    assert!(table.ends_with("6,2,all,33,8,16,8,65\n"));
    let plot = std::fs::read_to_string(dir.path().join("r2.log2.csv")).unwrap();
    let lines: Vec<&str> = plot.lines().collect();
    assert_eq!(lines[0], "n,log2_N_1,log2_N_zeta_1,log2_N_negzeta_1,log2_N_neg1");
    assert_eq!(lines[6], "6,5.044394,3.000000,4.000000,3.000000");
    assert_eq!(lines[1], "1,0.000000,0.000000,,");
}

#[test]
fn explicit_plot_path() {
    let dir = tempfile::tempdir().unwrap();
    let plot = dir.path().join("plot.csv");
    let out = run(&["table", "--r", "3", "--n", "3", "--plot", plot.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(Path::new(&plot).exists());
}

#[test]
fn output_is_stable_across_worker_counts() {
    let args = |w: &'static str| ["--workers", w, "table", "--r", "3", "--n", "7"];
    let one = run(&args("1"));
    let four = run(&args("4"));
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, run(&args("4")).stdout);
    let v1 = run(&["--workers", "1", "verify", "--r", "3", "--n", "5", "--format", "json"]);
    let v4 = run(&["--workers", "4", "verify", "--r", "3", "--n", "5", "--format", "json"]);
    assert_eq!(v1.stdout, v4.stdout);
}

#[test]
fn count_aggregate_and_composition() {
    let out = run(&["count", "--n", "4", "--r", "3", "--check"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("4,3,all,12,3,3,6,6,21,51"));
    let out = run(&["count", "--composition", "2,1,1", "--r", "3", "--check"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("4,3,\"2,1,1\",0,0,0,0,0,6,6"));
}

#[test]
fn count_composition_reference_claim_respects_strict_flag() {
    let relaxed = run(&["count", "--composition", "3,0,0", "--check"]);
    assert_eq!(code(&relaxed), 0, "{}", stderr(&relaxed));
    let strict = run(&["count", "--composition", "3,0,0", "--check", "--strict-paper"]);
    assert_eq!(code(&strict), 1);
}

#[test]
fn classify_examples() {
    let out = run(&["classify", "2,2,2", "--r", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("families: 1,"), "{text}");
    assert!(text.contains("possible: 1\n"));

    let text = stdout(&run(&["classify", "3,3,0", "--r", "3"]));
    assert!(text.contains("families: 2,4"), "{text}");
    assert!(text.contains("possible: 1, zeta^1, zeta^2\n"));

    let out = run(&["classify", "1,1,1,1,0", "--check"]);
    let text = stdout(&out);
    assert!(text.contains("families: 5\n"), "{text}");
    assert!(text.contains("check: pass"));
    assert_eq!(code(&out), 0);
}

#[test]
fn mp_examples() {
    for (n, r, p, v) in [("2", "2", "2", "4"), ("1", "5", "3", "5"), ("0", "3", "2", "1")] {
        let out = run(&["mp", "--n", n, "--r", r, "--p", p]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), format!("generating function: {v}\nenumeration: {v}\n"));
    }
}

#[test]
fn verify_default_scope_passes() {
    let out = run(&["verify"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).trim_end().ends_with("PASS"));
}

#[test]
fn verify_fails_on_injected_fault() {
    let out = run(&["verify", "--r", "3", "--n", "4", "--inject-fault"]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("FAIL"));
    assert!(text.contains("sum-identity") || text.contains("aggregate-paths"), "{text}");
}

#[test]
fn verify_strict_fails_on_reference_claims() {
    let out = run(&["verify", "--r", "3", "--n", "6", "--strict-paper"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("pair-sums-divisible"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(code(&run(&["det", "1;x"])), 2);
    assert_eq!(code(&run(&["det", "1;1", "--r", "3"])), 2);
    assert_eq!(code(&run(&["classify", "2,-1"])), 2);
    assert_eq!(code(&run(&["mp", "--n", "3", "--r", "2", "--p", "4"])), 2);
    assert_eq!(code(&run(&["table", "--r", "2"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn cap_exceeded_exits_3() {
    let out = run(&["table", "--r", "9", "--n", "30"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("exceeds the cap"));
    let out = run(&["--cap", "10", "count", "--n", "5", "--r", "3"]);
    assert_eq!(code(&out), 3);
    let out = run(&["--cap", "100000", "table", "--r", "2", "--n", "10"]);
    assert_eq!(code(&out), 0);
}
