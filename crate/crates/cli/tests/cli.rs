use std::path::PathBuf;
use std::process::{Command, Output};

fn orw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orw"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn algebra_check_passes_for_virasoro() {
    let out = orw(&["algebra", "check", "--algebra", "vir"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("PASS: super-jacobi vir"));
}

#[test]
fn algebra_check_fails_for_printed_sw22() {
    let out = orw(&["algebra", "check", "--algebra", "sw22", "--window", "-2..2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL: super-jacobi sw22"));
}

#[test]
fn orw_parameters_are_flags() {
    let out = orw(&["algebra", "check", "--lambda", "0", "--epsilon", "0", "--window", "-3..3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("orw(lambda=0,epsilon=0)"));
}

#[test]
fn module_check_reports_twist() {
    let out = orw(&["module", "check", "--module", "Sab", "--over", "ns"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("twist=orient:x+orient:y"));
}

#[test]
fn omega_scan_finds_minimum() {
    let out = orw(&["omega", "scan", "--kind", "GL", "--module", "HalfS"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("min_m = 3"));
    let json = orw(&["omega", "scan", "--kind", "LL", "--module", "Aab", "--b", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["min_m"], 2);
}

#[test]
fn pbw_eq_uses_bracket_convention() {
    let out = orw(&["pbw", "eq", "--algebra", "vir", "--lhs", "L[1] L[-1]", "--rhs", "L[-1] L[1] + -2 * L[0]"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("equal\n"));
    let out = orw(&["pbw", "eq", "--algebra", "vir", "--lhs", "L[1] L[-1]", "--rhs", "L[-1] L[1]"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn bad_input_exits_two() {
    for args in [
        vec!["pbw", "eq", "--algebra", "vir", "--lhs", "L[1/2]", "--rhs", "L[0]"],
        vec!["pbw", "normal", "--algebra", "vir", "--element", "L[1] +"],
        vec!["algebra", "check", "--algebra", "nope"],
        vec!["algebra", "check", "--window", "4"],
        vec!["module", "check", "--module", "Zzz"],
        vec!["grassmann", "lemma33", "--m", "1", "--k", "1", "--s", "1"],
        vec!["suite", "nope"],
        vec!["frobnicate"],
    ] {
        assert_eq!(code(&orw(&args)), 2, "{args:?}");
    }
}

#[test]
fn grassmann_lemma33_passes() {
    let out = orw(&["grassmann", "lemma33", "--m", "1", "--k", "3", "--s", "-1/2"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn suite_report_is_byte_identical_across_runs() {
    let a = orw(&["suite", "lemma33"]);
    let b = orw(&["suite", "lemma33"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["summary"]["total"], 14);
    // The m = 1 sharpness check fails, so the exit code is 1.
    assert_eq!(code(&a), 1);
}

#[test]
fn config_file_overrides_flags_and_sets_output() {
    let report = scratch("lemma21.json");
    let cfg = scratch("cfg.toml");
    std::fs::write(&cfg, format!("max_m = 4\noutput = {:?}\n", report.display().to_string())).unwrap();
    let out = orw(&["suite", "lemma21", "--max-m", "1", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["summary"]["pass"], 4);
}

#[test]
fn bad_config_exits_two() {
    let cfg = scratch("bad.toml");
    std::fs::write(&cfg, "window = [3, -3]\n").unwrap();
    assert_eq!(code(&orw(&["suite", "jacobi", "--config", cfg.to_str().unwrap()])), 2);
    let json = scratch("bad.json");
    std::fs::write(&json, "{\"unknown\": 1}").unwrap();
    assert_eq!(code(&orw(&["suite", "jacobi", "--config", json.to_str().unwrap()])), 2);
}

#[test]
fn custom_table_runs_through_jacobi_suite() {
    let cfg = scratch("custom.toml");
    std::fs::write(
        &cfg,
        r#"
algebras = [{ algebra = "witt" }]

[custom]
name = "heis"
window = [-4, 4]
families = [{ name = "P", parity = "even" }, { name = "Z", parity = "central" }]
entries = [
    { x = "P[1]", y = "P[-1]", result = [["1", "Z[0]"]] },
    { x = "P[-1]", y = "P[1]", result = [["-1", "Z[0]"]] },
]
"#,
    )
    .unwrap();
    let out = orw(&["suite", "jacobi", "--config", cfg.to_str().unwrap()]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(code(&out), 0, "{v}");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["check"] == "custom table"));
}

#[test]
fn one_sided_custom_table_fails_antisymmetry() {
    let cfg = scratch("one_sided.toml");
    std::fs::write(
        &cfg,
        r#"
algebras = [{ algebra = "witt" }]

[custom]
name = "half"
window = [-2, 2]
families = [{ name = "P", parity = "even" }, { name = "Z", parity = "central" }]
entries = [{ x = "P[1]", y = "P[-1]", result = [["1", "Z[0]"]] }]
"#,
    )
    .unwrap();
    let out = orw(&["suite", "jacobi", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("antisymmetry violations=2"));
}

#[test]
fn suite_all_is_byte_identical_across_runs() {
    let a = orw(&["suite", "all"]);
    let b = orw(&["suite", "all"]);
    assert_eq!(code(&a), 1);
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}
