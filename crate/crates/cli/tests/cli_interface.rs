//! End-to-end tests of the binary: exit codes, report shapes, and byte
//! determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn ltslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltslab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn write_temp(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ltslab-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).unwrap();
    path
}

#[test]
fn verify_commutator_rule_passes() {
    let out = ltslab(&["verify", "commutator-s2", "--max-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("commutator-power n=8: PASS"));
}

#[test]
fn centralizer_json_shape() {
    let out = ltslab(&[
        "centralizer",
        "--system",
        "so3",
        "--degree",
        "4",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["dim"], 4);
    assert_eq!(value["verdict"], true);
    assert!(value.get("timing_ms").is_none(), "timing only on request");
}

#[test]
fn axioms_failure_exits_one_with_witness() {
    let path = write_temp(
        "broken.json",
        r#"{"dim": 2, "ternary": [[0,1,0, 0, 3,1], [1,0,0, 0, -2,1],
                                   [0,1,1, 1, -2,1], [1,0,1, 1, 2,1]]}"#,
    );
    let out = ltslab(&["axioms", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.contains("basis tuple"), "witness must be reported");
}

#[test]
fn malformed_json_exits_two_with_position() {
    let path = write_temp("malformed.json", r#"{"dim": 2, "ternary": [[0"#);
    let out = ltslab(&["axioms", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line"), "position expected in: {err}");
}

#[test]
fn unknown_catalog_name_exits_two() {
    let out = ltslab(&["axioms", "--system", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_error_exits_two() {
    let out = ltslab(&["not-a-verb"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [
        vec!["verify", "delta-bracket", "--format", "json"],
        vec![
            "centralizer",
            "--system",
            "S2",
            "--degree",
            "3",
            "--format",
            "json",
        ],
        vec!["envelope", "--system", "so3", "--format", "json"],
    ] {
        let a = ltslab(&args);
        let b = ltslab(&args);
        assert_eq!(a.stdout, b.stdout, "non-deterministic output for {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn json_reports_carry_exact_integer_pairs() {
    let out = ltslab(&[
        "mul",
        "--system",
        "S2",
        "--left",
        "[[[0], 1, 2]]",
        "--right",
        "[[[1], 1, 3]]",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    // (e/2)(f/3) = (1/6) e f: coefficient encoded as [num, den].
    assert_eq!(value["product"][0][1][0], 1);
    assert_eq!(value["product"][0][1][1], 6);
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(!text.contains('.'), "no floats anywhere in the output");
}

#[test]
fn mul_recovers_the_bracket() {
    // e (f e) - f (e e) = 2 e in the S2 enveloping algebra.
    let fe = ltslab(&[
        "mul",
        "--system",
        "S2",
        "--left",
        "[[[1], 1, 1]]",
        "--right",
        "[[[0], 1, 1]]",
        "--format",
        "json",
    ]);
    assert_eq!(fe.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&fe.stdout).unwrap();
    // f e equals the ordered monomial (e f), by commutativity on V.
    assert_eq!(value["product"][0][0], serde_json::json!([0, 1]));
}

#[test]
fn decompose_truncated_polynomial_table() {
    let path = write_temp(
        "fx3.json",
        r#"{"dim": 3, "unit": 0,
            "table": [[0,0, 0, 1,1], [0,1, 1, 1,1], [0,2, 2, 1,1],
                      [1,0, 1, 1,1], [2,0, 2, 1,1],
                      [1,1, 2, 1,1]]}"#,
    );
    let out = ltslab(&[
        "decompose",
        "--file",
        path.to_str().unwrap(),
        "--subspace",
        "[[0,1,0]]",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("all checks passed"));
}

#[test]
fn nuclei_of_a_table_file() {
    let path = write_temp(
        "fxx.json",
        r#"{"dim": 2, "unit": 0,
            "table": [[0,0, 0, 1,1], [0,1, 1, 1,1], [1,0, 1, 1,1], [1,1, 1, 1,1]]}"#,
    );
    let out = ltslab(&[
        "nuclei",
        "--file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["left_nucleus_dim"], 2);
    assert_eq!(value["center_dim"], 2);
    assert_eq!(value["induced_system_satisfies_lts_axioms"], true);
}

#[test]
fn output_file_option_writes_the_report() {
    let target = std::env::temp_dir().join(format!("ltslab-out-{}.json", std::process::id()));
    let _ = std::fs::remove_file(&target);
    let out = ltslab(&[
        "verify",
        "so3-determinant",
        "--max-n",
        "4",
        "--format",
        "json",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&target).unwrap();
    let value: serde_json::Value = serde_json::from_str(written.trim()).unwrap();
    assert_eq!(value["command"], "so3-determinant");
    let _ = std::fs::remove_file(&target);
}
