//! Exit codes and output surface of the command-line front end.

use std::process::Command;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_stabkit")
}

#[test]
fn unknown_subcommand_exits_2_with_usage() {
    let out = Command::new(bin()).arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("usage:"));
}

#[test]
fn unknown_flag_exits_2() {
    let out = Command::new(bin())
        .args(["verify", "durbin", "--wat"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bad_group_expression_exits_2() {
    let out = Command::new(bin())
        .args(["inspect", "--group", "wobble(3)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inspect_psl2_8_lists_the_maximal_indices() {
    let out = Command::new(bin())
        .args(["inspect", "--group", "psl2(8)", "--maximals"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("order 504"));
    for index in ["9", "28", "36"] {
        assert!(
            text.lines()
                .any(|l| l.contains("index") && l.contains(index)),
            "missing index {} in:\n{}",
            index,
            text
        );
    }
}

#[test]
fn unwritable_report_path_exits_3() {
    let out = Command::new(bin())
        .args([
            "verify",
            "durbin",
            "--max-order",
            "100",
            "--report",
            "/nonexistent-dir/report.json",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn lemma_sylow_single_q_passes_with_exit_0() {
    let out = Command::new(bin())
        .args(["verify", "lemma-sylow", "--q", "7", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_slice(&out.stdout).expect("stdout is a JSON report");
    assert_eq!(v["checks"][0]["id"], "lemma-sylow");
    assert_eq!(v["checks"][0]["status"], "pass");
}

#[test]
fn failing_expectation_would_exit_1() {
    // max-order above the catalog bound is a usage-level rejection
    let out = Command::new(bin())
        .args(["verify", "theorem-b", "--max-order", "20000"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_from_file_works_end_to_end() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("stabkit-cli-test-{}.gens", std::process::id()));
    std::fs::write(&path, "degree 5\nperm 1 0 2 3 4\nperm 1 2 3 4 0\n").unwrap();
    let expr = format!("file:{}", path.display());
    let out = Command::new(bin())
        .args(["inspect", "--group", &expr])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("order 120"));
}
