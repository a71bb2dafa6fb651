//! End-to-end tests of the command-line interface, driving the compiled
//! binary.

use std::path::Path;
use std::process::{Command, Output};

fn gelfand(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gelfand"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn gelfand_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gelfand"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn build_sn_3_exports_four_basis_elements_and_two_generators() {
    let out = gelfand(&["build", "--model", "sn", "--n", "3"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["dimension"], 4);
    assert_eq!(value["basis"].as_array().unwrap().len(), 4);
    let generators = value["generators"].as_array().unwrap();
    assert_eq!(generators.len(), 2);
    assert_eq!(generators[0]["name"], "s1");
    assert_eq!(generators[1]["name"], "s2");
}

#[test]
fn build_qrook_2_exports_polynomial_generators() {
    let out = gelfand(&["build", "--model", "qrook", "--n", "2"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["dimension"], 5);
    let names: Vec<&str> = value["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["name"].as_str().unwrap())
        .collect();
    assert_eq!(names, vec!["T1", "P1", "P2"]);
    // entries are coefficient-string arrays; T1 on the identity column is q
    let t1 = &value["generators"][0]["matrix"];
    assert_eq!(t1[0][0], serde_json::json!(["0", "1"]));
}

#[test]
fn identical_configs_produce_byte_identical_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, _) in [(&a, 0), (&b, 1)] {
        let out = gelfand(&[
            "build",
            "--model",
            "hecke",
            "--n",
            "4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn csv_export_quotes_polynomial_entries() {
    let out = gelfand(&["build", "--model", "hecke", "--n", "2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("# matrix T1"));
    assert!(text.contains("\"0,1\""));
}

#[test]
fn verify_isn_3_passes() {
    let out = gelfand(&["verify", "--model", "isn", "--n", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("commutant = 7, expected = 7"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_qrook_3_at_q0_one_compares_with_the_rook_monoid_model() {
    let out = gelfand(&["verify", "--model", "qrook", "--n", "3", "--q0", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("q0 = 1 matrices equal the rook monoid model: PASS"));
}

#[test]
fn verify_report_file_is_deterministic_and_timing_free() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = gelfand(&[
            "verify",
            "--model",
            "sn",
            "--n",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let bytes_a = std::fs::read(&a).unwrap();
    assert_eq!(bytes_a, std::fs::read(&b).unwrap());
    let report: serde_json::Value = serde_json::from_slice(&bytes_a).unwrap();
    assert!(report["certificate"]["timing_ms"].is_null());
    assert_eq!(report["passed"], true);
}

#[test]
fn left_zero_table_fails_hypotheses_with_exit_code_two() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("left0.json");
    std::fs::write(&table, r#"{"size": 2, "table": [0, 0, 1, 1]}"#).unwrap();
    let out = gelfand(&["build", "--model", &format!("table:{}", table.display())]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("not an inverse semigroup"), "stderr: {err}");
}

#[test]
fn group_table_with_iso_data_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("c2.json");
    std::fs::write(
        &table,
        r#"{"size": 2, "table": [0, 1, 1, 0], "names": ["e", "g"],
           "dclasses": [{"idempotent": 0, "young_blocks": [2],
                         "iso": {"0": [1, 2], "1": [2, 1]}}]}"#,
    )
    .unwrap();
    let out = gelfand(&["verify", "--model", &format!("table:{}", table.display())]);
    assert!(out.status.success());
}

#[test]
fn capacity_violations_exit_with_code_two() {
    let out = gelfand(&["build", "--model", "isn", "--n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = gelfand(&["verify", "--model", "qrook", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
    // --deep unlocks n = 5 for the build path
    let out = gelfand(&["build", "--model", "qrook", "--n", "5", "--deep"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn decompose_requires_the_symmetric_group_model() {
    let out = gelfand(&["decompose", "--model", "hecke", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decompose_reports_sectors() {
    let out = gelfand(&["decompose", "--model", "sn", "--n", "4"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["shape_sets_disjoint"], true);
    assert_eq!(value["passed"], true);
    let sectors = value["sectors"].as_array().unwrap();
    assert_eq!(sectors.len(), 3);
    assert_eq!(sectors[1]["dimension"], 6);
    assert_eq!(sectors[2]["dimension"], 3);
}

#[test]
fn environment_variables_mirror_the_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_gelfand"))
        .env("GELFAND_MODEL", "sn")
        .env("GELFAND_N", "2")
        .args(["build"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(value["model"], "sn");
    assert_eq!(value["n"], 2);
}

#[test]
fn relative_table_paths_resolve_against_the_working_directory() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("semilattice.json"),
        r#"{"size": 2, "table": [0, 0, 0, 1]}"#,
    )
    .unwrap();
    let out = gelfand_in(dir.path(), &["verify", "--model", "table:semilattice.json"]);
    assert!(out.status.success());
}
