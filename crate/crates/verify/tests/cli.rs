use std::path::{Path, PathBuf};
use std::process::Command;

fn cases() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../cases")
}

fn verify(args: &[&str]) -> (i32, String) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .arg("--report")
        .arg(&out)
        .output()
        .unwrap();
    let report = std::fs::read_to_string(&out).unwrap_or_default();
    (status.status.code().unwrap(), report)
}

fn case(name: &str) -> String {
    cases().join(name).display().to_string()
}

#[test]
fn nontrivial_quintic_asserts_everything() {
    let (code, report) = verify(&["--input", &case("quintic_nontrivial.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["conclusions_asserted"], true);
    assert_eq!(v["conclusions"][0]["key"], "picard_rank");
    assert_eq!(v["conclusions"][0]["value"], 17);
    assert_eq!(v["conclusions"][0]["source"], "COMPUTED");
    for c in v["conclusions"].as_array().unwrap() {
        let s = c["source"].as_str().unwrap();
        assert!(s == "COMPUTED" || (s.starts_with("CITED(") && s.ends_with(')')), "{s}");
    }
    assert_eq!(v["equivariant_audit"]["factors"][0]["h1_v"], 1);
}

#[test]
fn repeated_quintic_is_withheld() {
    let (code, report) = verify(&["--input", &case("repeated_quintic.json")]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["withheld_by"], "disjointness");
    assert!(v["conclusions"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_byte_identical() {
    let a = verify(&["--input", &case("quintic_cubic_trivial.json")]);
    let b = verify(&["--input", &case("quintic_cubic_trivial.json")]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
}

#[test]
fn injected_faults_withhold() {
    for check in [
        "galois_groups",
        "disjointness",
        "absolute_simplicity",
        "h1_galois_module",
        "h1_kummer_lattice",
        "h1_pic_model",
    ] {
        let (code, report) = verify(&["--input", &case("quintic_nontrivial.json"), "--inject-fault", check]);
        assert_eq!(code, 2, "{check}");
        let v: serde_json::Value = serde_json::from_str(&report).unwrap();
        assert_eq!(v["withheld_by"], check);
    }
}

#[test]
fn input_errors_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"factors": [{"poly": ["1", "1"]}]}"#).unwrap();
    assert_eq!(verify(&["--input", bad.to_str().unwrap()]).0, 1);
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(verify(&["--input", bad.to_str().unwrap()]).0, 1);
    assert_eq!(verify(&["--input", "/nonexistent/case.json"]).0, 1);
    assert_eq!(verify(&["--input", &case("quintic_nontrivial.json"), "--inject-fault", "nope"]).0, 1);
}

#[test]
fn heuristic_mode_flag_is_accepted() {
    let (code, report) = verify(&["--input", &case("quintic_nontrivial.json"), "--mode", "heuristic"]);
    assert_eq!(code, 0);
    assert!(report.contains("\"mode\": \"heuristic\""));
}

#[test]
fn example_2_audit_passes() {
    let (code, report) = verify(&["--audit", "example2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["sextic_disc_class"], "-{3, 13, 31}");
}
