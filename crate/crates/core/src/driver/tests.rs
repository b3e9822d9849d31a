use super::*;
use crate::error::Error;
use crate::pbw::element_equal;
use crate::superalg::named;

#[test]
fn parse_round_trips_through_format() {
    let vir = named("vir");
    for text in ["L[2] L[-1]", "3/2 * L[0] + C[0]", "-1 * L[1] L[1]", "5"] {
        let e = parse_element(&vir, text).unwrap();
        let again = parse_element(&vir, &e.format(&vir)).unwrap();
        assert!(element_equal(&vir, &e, &again).unwrap(), "{text}");
    }
}

#[test]
fn parse_rejects_bad_input_with_offsets() {
    let vir = named("vir");
    match parse_element(&vir, "L[1] + ") {
        Err(Error::Parse(p)) => assert_eq!(p.offset, 7),
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_element(&vir, "Q[1]"), Err(Error::UnknownGenerator(..))));
    assert!(matches!(parse_element(&vir, "L[1/2]"), Err(Error::LatticeMismatch { .. })));
    assert!(matches!(parse_element(&vir, "L[1/3]"), Err(Error::Parse(_))));
    assert!(matches!(parse_element(&vir, "L[1] * 2"), Err(Error::Parse(_))));
}

#[test]
fn config_defaults_and_overrides() {
    let cfg = SuiteConfig::from_toml_str("").unwrap();
    assert_eq!(cfg.max_m(), 6);
    assert_eq!(cfg.orw_sweep().len(), 2 * DEFAULT_LAMBDAS.len());
    let cfg = SuiteConfig::from_toml_str("max_m = 4\nlambdas = [\"2\"]\nwindow = [-4, 4]\n").unwrap();
    assert_eq!(cfg.max_m(), 4);
    assert_eq!(cfg.orw_sweep().len(), 2);
    let json = SuiteConfig::from_str_auto(r#"{"max_m": 3}"#).unwrap();
    assert_eq!(json.max_m(), 3);
}

#[test]
fn config_errors_are_config_errors() {
    for bad in [
        "bogus = 1",
        "window = [4, -4]",
        "window = [-1000, 4]",
        "max_m = 99",
        "lambdas = [\"x\"]",
        "[[algebras]]\nalgebra = \"nope\"",
        "[[modules]]\nmodule = \"Aab\"\na = \"1/0\"",
    ] {
        assert!(matches!(SuiteConfig::from_toml_str(bad), Err(Error::Config(_))), "{bad}");
    }
}

#[test]
fn custom_table_resolves() {
    let text = r#"
[custom]
name = "sl2ish"
window = [-4, 4]
families = [{ name = "E", parity = "even" }]
entries = [{ x = "E[1]", y = "E[-1]", result = [["2", "E[0]"]] }]
"#;
    let cfg = SuiteConfig::from_toml_str(text).unwrap();
    let alg = cfg.custom.as_ref().unwrap().resolve().unwrap();
    assert_eq!(alg.name(), "sl2ish");
}

#[test]
fn unknown_suite_is_config_error() {
    assert!(matches!(
        run_suite("nope", &SuiteConfig::default()),
        Err(Error::Config(_))
    ));
}

#[test]
fn oracle_degree_drop() {
    assert!(!aab_ll_oracle(2).is_zero());
    assert!(aab_ll_oracle(3).is_zero());
}

#[test]
fn report_counts_and_exit_code() {
    let ok = CheckResult::new("s", "a", true, "");
    let bad = CheckResult::new("s", "b", false, "");
    assert_eq!(bad.payload, "failed");
    let r = SuiteReport::new("s", vec![bad.clone(), ok.clone()]);
    assert_eq!(r.checks[0].check, "a");
    assert_eq!(r.exit_code(), 1);
    assert_eq!(SuiteReport::new("s", vec![ok]).exit_code(), 0);
    assert!(r.to_json().contains("\"schema_version\": 1"));
}

#[test]
fn lemma21_suite_passes() {
    let r = run_suite("lemma21", &SuiteConfig::default()).unwrap();
    assert!(r.all_passed(), "{}", r.to_json());
}
