use std::collections::BTreeMap;
use std::sync::Arc;

use super::*;
use crate::pbw::{EnvElement, OmegaKind, Word};
use crate::scalar::{rat, PolyScalar, Rational};
use crate::superalg::{named, orw, AlgebraPresentation, DegreeWindow, HalfInt};

fn alg(name: &str) -> Arc<AlgebraPresentation> {
    Arc::new(named(name))
}

fn half_l() -> Arc<AlgebraPresentation> {
    Arc::new(orw(rat(-1, 2), 1))
}

fn sym() -> BTreeMap<String, ParamValue> {
    BTreeMap::new()
}

fn vals(pairs: &[(&str, Rational)]) -> BTreeMap<String, ParamValue> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), ParamValue::Value(v.clone())))
        .collect()
}

fn p(text: &str) -> PolyScalar {
    // a + j + 2b style sums of single variables and integers
    let mut acc = PolyScalar::zero();
    for part in text.split('+') {
        let part = part.trim();
        let (c, v) = match part.split_once('*') {
            Some((c, v)) => (c.parse::<i64>().unwrap(), v),
            None => match part.parse::<i64>() {
                Ok(n) => {
                    acc = &acc + &PolyScalar::from_int(n);
                    continue;
                }
                Err(_) => (1, part),
            },
        };
        acc = &acc + &PolyScalar::var(v).scale(&rat(c, 1));
    }
    acc
}

fn gen(a: &AlgebraPresentation, text: &str) -> crate::superalg::GeneratorRef {
    a.parse_generator(text).unwrap()
}

#[test]
fn aab_l2_coefficient() {
    let vir = alg("vir");
    let spec = module_build("Aab", vir.clone(), &sym()).unwrap();
    let e = EnvElement::generator(&vir, gen(&vir, "L[2]"));
    let v = symbolic_act(&spec, &e, 0).unwrap();
    assert_eq!(v.coefficient(0, HalfInt::int(2)), p("a + j + 2*b"));
    assert_eq!(v.entries().count(), 1);
}

#[test]
fn aabc_g_rules_are_zero() {
    let q = alg("q");
    let spec = module_build("Aabc", q.clone(), &sym()).unwrap();
    let g = q.family_id("G").unwrap();
    assert!(spec.rule(g, 0).is_zero());
    assert!(g_trivial(&spec).unwrap());
}

#[test]
fn halfs_g_half_on_x() {
    let l = half_l();
    let spec = module_build("HalfS", l.clone(), &sym()).unwrap();
    let e = EnvElement::generator(&l, gen(&l, "G[1/2]"));
    let v = symbolic_act(&spec, &e, 0).unwrap();
    assert_eq!(v.coefficient(1, HalfInt::half(0)), p("a + j + b"));
}

#[test]
fn aab_zero_zero_kills_v0() {
    let vir = alg("vir");
    let spec = module_build("Aab", vir.clone(), &vals(&[("a", rat(0, 1)), ("b", rat(0, 1))])).unwrap();
    for m in -3..=3 {
        let e = EnvElement::generator(&vir, gen(&vir, &format!("L[{m}]")));
        let v = symbolic_act(&spec, &e, 0).unwrap().at_index(HalfInt::ZERO);
        assert!(v.is_zero(), "m = {m}");
    }
}

#[test]
fn halfs_gg_word_vanishes() {
    let l = half_l();
    let spec = module_build("HalfS", l.clone(), &sym()).unwrap();
    let e = EnvElement::word(&l, Word(vec![gen(&l, "G[3/2]"), gen(&l, "G[1/2]")]), PolyScalar::one());
    assert!(symbolic_act(&spec, &e, 0).unwrap().is_zero());
}

#[test]
fn module_build_errors() {
    assert!(module_build("Nope", alg("vir"), &sym()).is_err());
    assert!(module_build("Sab", alg("vir"), &sym()).is_err());
    assert!(module_build("Aabc", alg("ns"), &sym()).is_err());
    assert!(module_build("HalfS", alg("ns"), &sym()).is_err());
}

#[test]
fn axioms_pass_on_catalog_examples() {
    let aab = module_build("Aab", alg("vir"), &sym()).unwrap();
    assert!(axiom_check(&aab, DegreeWindow::degrees(-4, 4)).unwrap().passed());
    let halfs = module_build("HalfS", half_l(), &sym()).unwrap();
    assert!(axiom_check(&halfs, DegreeWindow::degrees(-3, 3)).unwrap().passed());
    let aabc = module_build("Aabc", alg("q"), &sym()).unwrap();
    let rep = axiom_check(&aabc, DegreeWindow::degrees(-3, 3)).unwrap();
    assert!(rep.passed(), "{:?}", rep.failures.first());
}

#[test]
fn central_elements_act_as_zero() {
    for (m, a) in [("Aab", "vir"), ("Aabc", "q"), ("Sab", "ns"), ("Aab_trivial_ext", "bms3")] {
        let a = alg(a);
        let spec = module_build(m, a.clone(), &sym()).unwrap();
        for (id, fam) in a.families().iter().enumerate() {
            if !fam.is_central() {
                continue;
            }
            let e = EnvElement::generator(&a, crate::superalg::GeneratorRef::new(id, HalfInt::ZERO));
            for s in 0..spec.sectors().len() {
                assert!(symbolic_act(&spec, &e, s).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn sab_fails_as_printed_and_pins_uniquely() {
    for a in ["ns", "sw22"] {
        let spec = module_build("Sab", alg(a), &sym()).unwrap();
        assert!(!axiom_check(&spec, DegreeWindow::degrees(-3, 3)).unwrap().passed());
        let (pinned, rep) = pin_sign_convention(&spec, DegreeWindow::degrees(-3, 3)).unwrap();
        assert_eq!(rep.candidates, 8);
        assert_eq!(rep.twist, "orient:x+orient:y");
        assert!(axiom_check(&pinned, DegreeWindow::degrees(-4, 4)).unwrap().passed());
    }
}

#[test]
fn pinning_identity_and_double_flip() {
    let aab = module_build("Aab", alg("vir"), &sym()).unwrap();
    let (_, rep) = pin_sign_convention(&aab, DegreeWindow::degrees(-3, 3)).unwrap();
    assert_eq!(rep.twist, "identity");

    let spec = module_build("Sab", alg("ns"), &sym()).unwrap();
    let (pinned, _) = pin_sign_convention(&spec, DegreeWindow::degrees(-3, 3)).unwrap();
    let flipped = apply_twist(
        &spec,
        &Twist {
            flags: vec!["orient:x".into(), "flip:G@y".into()],
        },
    )
    .unwrap();
    let (repinned, rep) = pin_sign_convention(&flipped, DegreeWindow::degrees(-3, 3)).unwrap();
    assert_eq!(rep.twist, "orient:y+flip:G@y");
    assert_eq!(
        pinned.rules().collect::<Vec<_>>(),
        repinned.rules().collect::<Vec<_>>()
    );
}

/// Ω^{(m)} coefficient on `v_j` computed by the independent finite-difference
/// oracle in `i`.
fn aab_ll_oracle(m: usize, b: Option<Rational>) -> PolyScalar {
    let a = PolyScalar::var("a");
    let b = b.map(PolyScalar::constant).unwrap_or_else(|| PolyScalar::var("b"));
    let (j, s, k, i) = (PolyScalar::var("j"), PolyScalar::var("s"), PolyScalar::var("k"), PolyScalar::var("i"));
    let left = &(&a + &j) + &(&b * &(&s + &i));
    let right = &(&(&a + &j) + &(&s + &i)) + &(&b * &(&k - &i));
    (&left * &right).finite_difference("i", m).subst("i", &PolyScalar::zero())
}

#[test]
fn omega_ll_on_aab() {
    let spec = module_build("Aab", alg("vir"), &sym()).unwrap();
    let scan = omega_min_m(&spec, OmegaKind::LL, 5, DEFAULT_GRID).unwrap();
    assert_eq!(scan.min_m, Some(3));
    assert!(scan.steps[2].residual.is_some());
    for m in 0..=3 {
        let sym = symbolic_omega_residual(&spec, OmegaKind::LL, m).unwrap();
        let got = sym.first().map(|(_, p)| p.clone()).unwrap_or_default();
        assert_eq!(got, aab_ll_oracle(m, None), "m = {m}");
    }
    assert!(aab_ll_oracle(2, None).total_degree() > 0);

    let b0 = module_build("Aab", alg("vir"), &vals(&[("b", rat(0, 1))])).unwrap();
    assert_eq!(omega_min_m(&b0, OmegaKind::LL, 5, DEFAULT_GRID).unwrap().min_m, Some(2));
    assert!(aab_ll_oracle(2, Some(rat(0, 1))).is_zero());
}

#[test]
fn omega_on_halfs() {
    let spec = module_build("HalfS", half_l(), &sym()).unwrap();
    assert_eq!(omega_min_m(&spec, OmegaKind::GG, 4, DEFAULT_GRID).unwrap().min_m, Some(0));
    assert_eq!(omega_min_m(&spec, OmegaKind::GL, 4, DEFAULT_GRID).unwrap().min_m, Some(3));
    assert_eq!(omega_min_m(&spec, OmegaKind::LL, 4, DEFAULT_GRID).unwrap().min_m, Some(3));
}

fn scan(module: &str, a: &str, params: &[(&str, Rational)]) -> ScanReport {
    let spec = module_build(module, alg(a), &vals(params)).unwrap();
    WindowModule::new(spec, DegreeWindow::degrees(-10, 10), DEFAULT_MARGIN2)
        .unwrap()
        .submodule_scan()
}

#[test]
fn submodule_scan_examples() {
    let r = scan("Aab", "vir", &[("a", rat(0, 1)), ("b", rat(0, 1))]);
    assert_eq!(r.witnesses, vec![vec!["v[0]".to_string()]]);

    let r = scan("Aab", "vir", &[("a", rat(0, 1)), ("b", rat(1, 1))]);
    assert_eq!(r.witnesses.len(), 1);
    assert!(!r.witnesses[0].contains(&"v[0]".to_string()));
    assert_eq!(r.witnesses[0].len(), r.basis_size - 2 * 2 - 1);

    let r = scan("Aab", "vir", &[("a", rat(1, 2)), ("b", rat(1, 3))]);
    assert!(r.witnesses.is_empty());
    assert_eq!(r.verdict, "no witness found (window-limited)");
}

#[test]
fn halfs_has_odd_witness_and_nontrivial_g() {
    let l = half_l();
    for (a, b) in [(rat(1, 3), rat(1, 5)), (rat(0, 1), rat(0, 1)), (rat(1, 2), rat(1, 2))] {
        let spec = module_build("HalfS", l.clone(), &vals(&[("a", a), ("b", b)])).unwrap();
        assert!(!g_trivial(&spec).unwrap());
        let r = WindowModule::new(spec, DegreeWindow::degrees(-10, 10), DEFAULT_MARGIN2)
            .unwrap()
            .submodule_scan();
        assert!(r.witnesses.iter().any(|w| w.iter().all(|b| b.starts_with("y["))));
    }
}

#[test]
fn window_errors() {
    let spec = module_build("Aab", alg("vir"), &sym()).unwrap();
    assert!(WindowModule::new(spec.clone(), DegreeWindow::degrees(-10, 10), 4).is_err());
    let fixed = spec
        .specialize(&BTreeMap::from([("a".to_string(), rat(0, 1)), ("b".to_string(), rat(0, 1))]))
        .unwrap();
    assert!(WindowModule::new(fixed, DegreeWindow::doubled(-3, 3), 4).is_err());
}

#[test]
fn g_trivial_examples() {
    let ext = module_build("Aab_trivial_ext", half_l(), &sym()).unwrap();
    assert!(g_trivial(&ext).unwrap());
    assert!(g_trivial(&module_build("Aab", alg("vir"), &sym()).unwrap()).is_err());
}
