//! End-to-end runs of the binary: output shapes, exit codes, file round
//! trips through the surgeries command.

use std::process::Command;

fn khsplit(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_khsplit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn kh_solomon_table() {
    let (stdout, _, code) = khsplit(&["kh", "solomon"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("q=0: 1"));
    assert!(stdout.contains("q=10: 1"));
}

#[test]
fn jones_with_t_variable() {
    let (stdout, _, code) = khsplit(&["jones", "trefoil", "--t-variable"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("J(q) = q^2 + q^6 - q^8"));
    assert!(stdout.contains("J(t) = t + t^3 - t^4"));
}

#[test]
fn split_passes_on_catalog_cut() {
    let (stdout, _, code) = khsplit(&["split", "solomon_cut"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict: PASS"));
}

#[test]
fn nc_matrix_output() {
    let (stdout, _, code) = khsplit(&["nc", "--n", "2", "--matrix"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("non-crossing partitions of {1..2}: 2"));
    assert!(stdout.contains("[q^-1 + q, 1]"));
}

#[test]
fn json_output_is_valid_and_loss_free() {
    let (stdout, _, code) = khsplit(&["ss", "hopf_connected_sum", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid json");
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
    assert_eq!(v["report"]["collapse_page"], serde_json::json!(2));
    assert_eq!(
        v["report"]["convergence_pass"],
        serde_json::Value::Bool(true)
    );
    assert!(v["report"]["pages"].is_array());
}

#[test]
fn unknown_input_exits_2() {
    let (_, stderr, code) = khsplit(&["kh", "no_such_thing"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("neither a catalog entry nor a readable file"));
}

#[test]
fn surgery_files_round_trip() {
    let dir = std::env::temp_dir().join("khsplit_cli_test_surgeries");
    let _ = std::fs::remove_dir_all(&dir);
    let (_, _, code) = khsplit(&[
        "surgeries",
        "hopf_connected_sum",
        "--out",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let file = dir.join("side1_0.khd");
    assert!(file.exists());
    // the single surgery of the connected-sum cut is a Hopf diagram
    let (stdout, _, code) = khsplit(&["jones", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("J(q) = q + q^5"));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn selftest_passes() {
    let (stdout, _, code) = khsplit(&["selftest"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("selftest: PASS"));
    for i in 1..=9 {
        assert!(
            stdout.contains(&format!("criterion {}:", i)),
            "criterion {} missing from output",
            i
        );
    }
}
