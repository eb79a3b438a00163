use std::path::PathBuf;
use std::process::{Command, Output};

fn spindex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spindex")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn localize_four_sphere() {
    let o = spindex(&["localize", &data("four_sphere.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("vanishes: ind(z) = 0\n"));
}

#[test]
fn localize_single_point_fails() {
    let o = spindex(&["localize", &data("single_point.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("inconsistent: sum is not a Laurent polynomial"));
}

#[test]
fn localize_empty_list_and_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.json");
    std::fs::write(&input, r#"{"version": 1, "variable": "z", "fixed_points": []}"#).unwrap();
    let out = dir.path().join("out.json");
    let o = spindex(&["localize", input.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("vanishes: ind(z) = 0"));
    let report = spindex_cli::Report::from_json(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(report.checks.len(), 1);
}

#[test]
fn zero_rotation_exponent_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("zero.json");
    std::fs::write(
        &input,
        r#"{"version": 1, "variable": "z", "fixed_points": [{"name": "P", "tangent_exponents": ["2", "0"]}]}"#,
    )
    .unwrap();
    let o = spindex(&["localize", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("fixed_points[0].tangent_exponents[1]"));
}

#[test]
fn missing_file_and_bad_usage() {
    assert_eq!(spindex(&["localize", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(spindex(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(spindex(&["check-twist", "--r", "3", "--m", "1", "--m2", "1"]).status.code(), Some(2));
}

#[test]
fn check_twist_verdicts() {
    let o = spindex(&["check-twist", "--r", "3", "--m", "2", "--u", "1", "--s", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("r=3, m=2: admissible\n"));
    let o = spindex(&["check-twist", "--r", "3", "--m", "1", "--u", "0", "--s", "0"]);
    assert!(stdout(&o).ends_with("r=3, m=1: not admissible\n"));
    let o = spindex(&["check-twist", "--r", "6", "--m", "2"]);
    assert!(stdout(&o).ends_with("r=6, m=2: admissible\n"));
    let o = spindex(&["check-twist", "--r", "8", "--m", "1", "--m2", "2", "--u2", "1", "--mode", "oracle"]);
    assert!(stdout(&o).ends_with("r=8, m1=1, m2=2: admissible\n"));
}

#[test]
fn verify_suites() {
    let o = spindex(&["verify", "volume-table"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("4 passed, 0 failed, 0 skipped\n"));
    let o = spindex(&["verify", "structure-actions", "--r", "3", "--m", "1"]);
    assert!(stdout(&o).contains("\"value\":\"-1\""));
    let a = stdout(&spindex(&["verify", "lemma", "--samples", "500", "--seed", "7"]));
    let b = stdout(&spindex(&["verify", "lemma", "--samples", "500", "--seed", "7"]));
    assert_eq!(a, b);
    assert!(a.contains("0 failed"));
}

#[test]
fn dimension_cap_turns_checks_into_skips() {
    let o = Command::new(env!("CARGO_BIN_EXE_spindex"))
        .args(["verify", "clifford", "--samples", "5"])
        .env("SPINDEX_MAX_DIM", "6")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[SKIP] generator relations n=7"));
}
