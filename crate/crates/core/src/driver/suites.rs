use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grassmann::{first_non_member, ideal_build, monomials, verify_lemma33, OddWindow};
use crate::pbw::{verify_omega2_identity, verify_omega3_combination, OmegaKind};
use crate::scalar::{parse_rational, PolyScalar};
use crate::superalg::{check_antisymmetry, check_super_jacobi, DegreeWindow, HalfInt, Lattice};
use crate::weightmod::{
    axiom_check, g_trivial, omega_min_m, pin_sign_convention, symbolic_act, symbolic_omega_residual, WindowModule,
    DEFAULT_MARGIN2, FIRST_VAR, INDEX_VAR, SECOND_VAR,
};

use super::config::{AlgebraSel, ModuleSel, SuiteConfig};
use super::report::{CheckResult, Status, SuiteReport};

pub const SUITE_NAMES: [&str; 9] = [
    "jacobi", "modules", "lemma21", "lemma31", "lemma32", "lemma33", "thm34", "section5", "all",
];

/// What a submodule scan is expected to find.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanExpect {
    Exactly(Vec<String>),
    AllBut(String),
    AnyWitness,
    OddSectorWitness,
    NoWitness,
}

/// One entry of a suite's check list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Antisymmetry(AlgebraSel),
    Jacobi(AlgebraSel),
    CustomTable,
    ModuleAxioms(ModuleSel),
    CentralActsZero(ModuleSel),
    OmegaMin {
        module: ModuleSel,
        kind: OmegaKind,
        expect: usize,
    },
    FiniteDifferenceOracle,
    Omega2 {
        algebra: AlgebraSel,
        m: usize,
    },
    Omega3 {
        algebra: AlgebraSel,
        m: usize,
    },
    Lemma33 {
        m: usize,
        k: usize,
        s: HalfInt,
    },
    Sharpness {
        m: usize,
    },
    GTrivial {
        module: ModuleSel,
        expect: bool,
    },
    Scan {
        module: ModuleSel,
        expect: ScanExpect,
    },
}

fn sym(module: &str, over: AlgebraSel) -> ModuleSel {
    ModuleSel::new(module, over)
}

fn fixed(module: &str, over: AlgebraSel, a: &str, b: &str) -> ModuleSel {
    ModuleSel::new(module, over).with("a", a).with("b", b)
}

fn halfs_alg() -> AlgebraSel {
    AlgebraSel::orw("-1/2", "1/2")
}

/// The check list of a single (non-`all`) suite.
pub fn plan(suite: &str, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    use Check::*;
    let checks = match suite {
        "jacobi" => {
            let mut v = Vec::new();
            for a in cfg.algebras() {
                v.push(Antisymmetry(a.clone()));
                v.push(Jacobi(a));
            }
            if cfg.custom.is_some() {
                v.push(CustomTable);
            }
            v
        }
        "modules" => cfg
            .modules()
            .into_iter()
            .flat_map(|m| [ModuleAxioms(m.clone()), CentralActsZero(m)])
            .collect(),
        "lemma21" => vec![
            OmegaMin {
                module: sym("Aab", AlgebraSel::named("vir")),
                kind: OmegaKind::LL,
                expect: 3,
            },
            OmegaMin {
                module: sym("Aab", AlgebraSel::named("vir")).with("b", "0"),
                kind: OmegaKind::LL,
                expect: 2,
            },
            OmegaMin {
                module: sym("Flambda", AlgebraSel::named("witt")),
                kind: OmegaKind::LL,
                expect: 3,
            },
            FiniteDifferenceOracle,
        ],
        "lemma31" => vec![
            OmegaMin {
                module: sym("HalfS", halfs_alg()),
                kind: OmegaKind::GL,
                expect: 3,
            },
            OmegaMin {
                module: sym("HalfS", halfs_alg()),
                kind: OmegaKind::GG,
                expect: 0,
            },
            OmegaMin {
                module: sym("HalfS", halfs_alg()),
                kind: OmegaKind::LL,
                expect: 3,
            },
        ],
        "lemma32" => {
            let mut v = Vec::new();
            for a in cfg.orw_sweep() {
                let degenerate = parse_rational(a.lambda.as_deref().unwrap_or("-1/2"))? == crate::scalar::int(1);
                for m in 0..=4 {
                    v.push(Omega2 { algebra: a.clone(), m });
                    if !degenerate {
                        v.push(Omega3 { algebra: a.clone(), m });
                    }
                }
            }
            v
        }
        "lemma33" => {
            let mut v = Vec::new();
            for m in 0..=2 {
                for k in 1..=4 {
                    v.push(Lemma33 { m, k, s: HalfInt::half(0) });
                }
            }
            v.push(Lemma33 {
                m: 2,
                k: 2,
                s: HalfInt::half(-2),
            });
            v.push(Sharpness { m: 1 });
            v
        }
        "thm34" => {
            let mut v = vec![GTrivial {
                module: sym("HalfS", halfs_alg()),
                expect: false,
            }];
            for (a, b) in [("1/3", "1/5"), ("0", "0"), ("1/2", "1/2")] {
                v.push(Scan {
                    module: fixed("HalfS", halfs_alg(), a, b),
                    expect: ScanExpect::OddSectorWitness,
                });
            }
            for a in cfg.orw_sweep() {
                v.push(GTrivial {
                    module: sym("Aab_trivial_ext", a),
                    expect: true,
                });
            }
            v.push(GTrivial {
                module: sym("Aabc", AlgebraSel::named("q")),
                expect: true,
            });
            v.push(GTrivial {
                module: sym("Aab_trivial_ext", AlgebraSel::named("bms3")),
                expect: true,
            });
            v
        }
        "section5" => {
            let ns = || AlgebraSel::named("ns");
            let vir = || AlgebraSel::named("vir");
            let mut v: Vec<Check> = [
                sym("Aabc", AlgebraSel::named("q")),
                sym("Aab_trivial_ext", AlgebraSel::named("bms3")),
                sym("Sab", ns()),
                sym("PiSab", ns()),
                sym("Sab", AlgebraSel::named("sw22")),
                sym("PiSab", AlgebraSel::named("sw22")),
            ]
            .into_iter()
            .map(ModuleAxioms)
            .collect();
            v.extend([
                Scan {
                    module: fixed("Aab", vir(), "0", "0"),
                    expect: ScanExpect::Exactly(vec!["v[0]".into()]),
                },
                Scan {
                    module: fixed("Aab", vir(), "0", "1"),
                    expect: ScanExpect::AllBut("v[0]".into()),
                },
                Scan {
                    module: fixed("Aab", vir(), "1/2", "1/3"),
                    expect: ScanExpect::NoWitness,
                },
                Scan {
                    module: fixed("Sab", ns(), "0", "0"),
                    expect: ScanExpect::AnyWitness,
                },
                Scan {
                    module: fixed("Sab", ns(), "0", "1/2"),
                    expect: ScanExpect::AnyWitness,
                },
                Scan {
                    module: fixed("Sab", ns(), "1/3", "1/5"),
                    expect: ScanExpect::NoWitness,
                },
            ]);
            v
        }
        other => return Err(Error::Config(format!("unknown suite `{other}`"))),
    };
    Ok(checks)
}

fn check_id(c: &Check) -> String {
    match c {
        Check::Antisymmetry(a) => format!("antisymmetry {}", alg_label(a)),
        Check::Jacobi(a) => format!("super-jacobi {}", alg_label(a)),
        Check::CustomTable => "custom table".into(),
        Check::ModuleAxioms(m) => format!("axioms {}", m.label()),
        Check::CentralActsZero(m) => format!("central acts as zero {}", m.label()),
        Check::OmegaMin { module, kind, .. } => format!("omega_min_m {kind} {}", module.label()),
        Check::FiniteDifferenceOracle => "finite-difference oracle Aab LL".into(),
        Check::Omega2 { algebra, m } => format!("omega2 m={m} {}", alg_label(algebra)),
        Check::Omega3 { algebra, m } => format!("omega3 m={m} {}", alg_label(algebra)),
        Check::Lemma33 { m, k, s } => format!("lemma33 m={m} k={k} s={s}"),
        Check::Sharpness { m } => format!("sharpness degree {} at m={m}", m + 1),
        Check::GTrivial { module, .. } => format!("g_trivial {}", module.label()),
        Check::Scan { module, .. } => format!("submodule_scan {}", module.label()),
    }
}

fn alg_label(a: &AlgebraSel) -> String {
    match (&a.lambda, &a.epsilon) {
        (None, None) => a.algebra.clone(),
        (l, e) => format!(
            "{}(lambda={},epsilon={})",
            a.algebra,
            l.as_deref().unwrap_or("-1/2"),
            e.as_deref().unwrap_or("1/2")
        ),
    }
}

/// Runs one check. Errors become failing results.
pub fn execute(suite: &str, check: &Check, cfg: &SuiteConfig) -> CheckResult {
    let start = Instant::now();
    let id = check_id(check);
    let mut result = match run(check, cfg) {
        Ok((status, payload)) => {
            let mut r = CheckResult::new(suite, id, status == Status::Pass, payload);
            r.status = status;
            r
        }
        Err(e) => CheckResult::new(suite, id, false, format!("error: {e}")),
    };
    result.wall_time = start.elapsed();
    result
}

fn verdict(ok: bool, payload: String) -> Result<(Status, String)> {
    Ok((if ok { Status::Pass } else { Status::Fail }, payload))
}

fn run(check: &Check, cfg: &SuiteConfig) -> Result<(Status, String)> {
    let window = cfg.window();
    match check {
        Check::Antisymmetry(a) => {
            let rep = check_antisymmetry(&a.resolve()?, window);
            let first = rep
                .violations
                .first()
                .map(|v| format!("; first [{}, {}]: {} vs {}", v.x, v.y, v.xy, v.yx))
                .unwrap_or_default();
            verdict(
                rep.passed(),
                format!("pairs={} violations={}{first}", rep.pairs_checked, rep.violations.len()),
            )
        }
        Check::Jacobi(a) => {
            let rep = check_super_jacobi(&a.resolve()?, window);
            let shown: Vec<String> = rep
                .violations
                .iter()
                .take(3)
                .map(|v| format!("({}, {}, {}) residual {}", v.x, v.y, v.z, v.residual))
                .collect();
            let tail = if shown.is_empty() {
                String::new()
            } else {
                format!("; e.g. {}", shown.join("; "))
            };
            verdict(
                rep.passed(),
                format!("triples={} violations={}{tail}", rep.triples_checked, rep.violations.len()),
            )
        }
        Check::CustomTable => {
            let table = cfg.custom.as_ref().ok_or_else(|| Error::Config("no custom table".into()))?;
            let alg = table.resolve()?;
            let w = DegreeWindow::doubled(table.window[0], table.window[1]);
            let anti = check_antisymmetry(&alg, w);
            let jac = check_super_jacobi(&alg, w);
            verdict(
                anti.passed() && jac.passed(),
                format!(
                    "{}: antisymmetry violations={} jacobi violations={}",
                    table.name,
                    anti.violations.len(),
                    jac.violations.len()
                ),
            )
        }
        Check::ModuleAxioms(m) => {
            let spec = m.resolve()?;
            let (pinned, pin) = pin_sign_convention(&spec, DegreeWindow::degrees(-3, 3))?;
            let rep = axiom_check(&pinned, window)?;
            let first = rep
                .failures
                .first()
                .map(|f| format!("; first {} {} on {}: {}", f.x, f.y, f.sector, f.residual))
                .unwrap_or_default();
            verdict(
                rep.passed(),
                format!("twist={} pairs={}{first}", pin.twist, rep.pairs_checked),
            )
        }
        Check::CentralActsZero(m) => {
            let spec = m.resolve()?;
            let alg = spec.algebra();
            let mut bad = Vec::new();
            for (id, fam) in alg.families().iter().enumerate() {
                if !fam.is_central() {
                    continue;
                }
                let e = crate::pbw::EnvElement::generator(alg, crate::superalg::GeneratorRef::new(id, HalfInt::ZERO));
                for s in 0..spec.sectors().len() {
                    if !symbolic_act(&spec, &e, s)?.is_zero() {
                        bad.push(format!("{} on {}", fam.name, spec.sectors()[s].name));
                    }
                }
            }
            let names: Vec<&str> = alg
                .families()
                .iter()
                .filter(|f| f.is_central())
                .map(|f| f.name.as_str())
                .collect();
            verdict(bad.is_empty(), format!("central families [{}] {}", names.join(", "), bad.join("; ")).trim_end().to_string())
        }
        Check::OmegaMin { module, kind, expect } => {
            let spec = module.resolve()?;
            let scan = omega_min_m(&spec, *kind, cfg.max_m(), cfg.grid())?;
            let below: Vec<String> = scan
                .steps
                .iter()
                .filter(|s| Some(s.m) != scan.min_m)
                .map(|s| format!("m={} residual {}", s.m, s.residual.as_deref().unwrap_or("none")))
                .collect();
            let nonzero_below = scan
                .steps
                .iter()
                .filter(|s| Some(s.m) != scan.min_m)
                .all(|s| s.residual.is_some());
            let found = scan.min_m.map(|m| m.to_string()).unwrap_or_else(|| "none".into());
            let mut payload = format!("min_m={found} expected={expect}");
            if let Some(last) = below.last() {
                payload.push_str(&format!("; {last}"));
            }
            verdict(scan.min_m == Some(*expect) && nonzero_below, payload)
        }
        Check::FiniteDifferenceOracle => {
            let spec = sym("Aab", AlgebraSel::named("vir")).resolve()?;
            let mut mismatches = Vec::new();
            for m in 0..=cfg.max_m().max(3) {
                let engine = symbolic_omega_residual(&spec, OmegaKind::LL, m)?
                    .into_iter()
                    .next()
                    .map(|(_, p)| p)
                    .unwrap_or_default();
                let oracle = aab_ll_oracle(m);
                if engine != oracle {
                    mismatches.push(format!("m={m}: engine {engine} vs oracle {oracle}"));
                }
            }
            let m2 = aab_ll_oracle(2);
            let ok = mismatches.is_empty() && !m2.is_zero() && aab_ll_oracle(3).is_zero();
            verdict(ok, format!("m=2 oracle residual {m2}; {}", mismatches.join("; ")).trim_end_matches("; ").to_string())
        }
        Check::Omega2 { algebra, m } => {
            let alg = algebra.resolve()?;
            let glat = alg.family(alg.family_id("G").expect("orw has G")).lattice;
            let grid = cfg.grid();
            let pts: Vec<(HalfInt, HalfInt, HalfInt)> = grid_points(grid, glat)
                .into_iter()
                .flat_map(|r| {
                    grid_points(grid, Lattice::Integral)
                        .into_iter()
                        .flat_map(move |s| grid_points(grid, glat).into_iter().map(move |t| (r, s, t)))
                })
                .collect();
            let fails: Vec<String> = pts
                .par_iter()
                .map(|&(r, s, t)| verify_omega2_identity(&alg, *m, r, s, t))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|rep| !rep.passed)
                .map(|rep| format!("{}: {}", rep.identity, rep.residual.unwrap_or_default()))
                .collect();
            verdict(
                fails.is_empty(),
                format!("points={} failures={}{}", pts.len(), fails.len(), first_of(&fails)),
            )
        }
        Check::Omega3 { algebra, m } => {
            let alg = algebra.resolve()?;
            let glat = alg.family(alg.family_id("G").expect("orw has G")).lattice;
            let grid = cfg.grid();
            let ints = grid_points(grid, Lattice::Integral);
            let mut pts = Vec::new();
            for r in grid_points(grid, glat) {
                for u in grid_points(grid, glat) {
                    for (i, &s1) in ints.iter().enumerate() {
                        for &s2 in &ints[i + 1..] {
                            pts.push((r, u, s1, s2));
                        }
                    }
                }
            }
            let fails: Vec<String> = pts
                .par_iter()
                .map(|&(r, u, s1, s2)| verify_omega3_combination(&alg, *m, r, u, s1, s2))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .filter(|rep| !rep.passed)
                .map(|rep| format!("{}: {}", rep.identity, rep.residual.unwrap_or_default()))
                .collect();
            verdict(
                fails.is_empty(),
                format!("points={} failures={}{}", pts.len(), fails.len(), first_of(&fails)),
            )
        }
        Check::Lemma33 { m, k, s } => {
            let rep = verify_lemma33(*m, *k, *s)?;
            let payload = format!(
                "window={} relations={} monomials={} failures={} unsound={}{}",
                rep.window,
                rep.relations,
                rep.monomials_checked,
                rep.failures.len(),
                rep.unsound_certificates.len(),
                rep.failures
                    .first()
                    .map(|f| format!("; {} remainder {}", f.monomial, f.remainder))
                    .unwrap_or_default()
            );
            if rep.passed() {
                Ok((Status::Pass, payload))
            } else if rep.margin_limited {
                Ok((Status::SkippedMarginLimited, payload))
            } else {
                Ok((Status::Fail, payload))
            }
        }
        Check::Sharpness { m } => {
            let w = OddWindow::doubled(-1, 13)?;
            let mut notes = Vec::new();
            for mm in [*m, *m + 1] {
                let ideal = ideal_build(w, mm, mm + 2)?;
                for d in 2..=mm + 1 {
                    notes.push(format!(
                        "m={mm} degree {d}: rank {}/{}",
                        ideal.rank_in_degree(d),
                        monomials(&w.indices(), d).len()
                    ));
                }
            }
            let ideal = ideal_build(w, *m, *m + 2)?;
            let witness = first_non_member(&ideal, &w.indices(), *m + 1)?;
            let head = match &witness {
                Some(nm) => format!("non-member {} (remainder {})", nm.monomial, nm.remainder),
                None => format!("every degree-{} monomial on {w} is a member", m + 1),
            };
            verdict(witness.is_some(), format!("{head}; {}", notes.join("; ")))
        }
        Check::GTrivial { module, expect } => {
            let got = g_trivial(&module.resolve()?)?;
            verdict(got == *expect, format!("g_trivial={got} expected={expect}"))
        }
        Check::Scan { module, expect } => {
            let spec = module.resolve()?;
            let wm = WindowModule::new(spec, cfg.scan_window(), DEFAULT_MARGIN2)?;
            let rep = wm.submodule_scan();
            let ok = match expect {
                ScanExpect::Exactly(w) => rep.witnesses == vec![w.clone()],
                ScanExpect::AllBut(v) => {
                    rep.witnesses.len() == 1
                        && !rep.witnesses[0].contains(v)
                        && rep.witnesses[0].len() + 1 == inner_size(&wm)
                }
                ScanExpect::AnyWitness => !rep.witnesses.is_empty(),
                ScanExpect::OddSectorWitness => rep
                    .witnesses
                    .iter()
                    .any(|w| w.iter().all(|b| b.starts_with("y["))),
                ScanExpect::NoWitness => rep.witnesses.is_empty(),
            };
            let shown: Vec<String> = rep.witnesses.iter().take(2).map(|w| abbreviate(w)).collect();
            let shown = if shown.is_empty() { "none".to_string() } else { shown.join(" | ") };
            let mut payload = format!("{}; inner {}; witnesses {shown}", rep.verdict, rep.inner);
            if !ok && *expect == ScanExpect::AnyWitness && module.module == "Sab" {
                payload.push_str(&format!("; {}", boundary_diagnostic(module, cfg)?));
            }
            verdict(ok, payload.trim_end().to_string())
        }
    }
}

fn inner_size(wm: &WindowModule) -> usize {
    let inner = wm.inner();
    wm.basis().iter().filter(|b| inner.contains(b.1)).count()
}

/// Scan of the same module with `a` moved to `1/2`, where the printed
/// coefficients can vanish on the half-integer sector.
fn boundary_diagnostic(module: &ModuleSel, cfg: &SuiteConfig) -> Result<String> {
    let shifted = module.clone().with("a", "1/2");
    let wm = WindowModule::new(shifted.resolve()?, cfg.scan_window(), DEFAULT_MARGIN2)?;
    let rep = wm.submodule_scan();
    let shown: Vec<String> = rep.witnesses.iter().take(1).map(|w| abbreviate(w)).collect();
    Ok(format!("diagnostic {}: {} {}", shifted.label(), rep.verdict, shown.join("")))
}

fn abbreviate(w: &[String]) -> String {
    if w.len() <= 6 {
        format!("{{{}}}", w.join(", "))
    } else {
        format!("{{{}, ..., {}}} ({} vectors)", w[..3].join(", "), w[w.len() - 1], w.len())
    }
}

fn first_of(fails: &[String]) -> String {
    fails.first().map(|f| format!("; first {f}")).unwrap_or_default()
}

fn grid_points(grid: DegreeWindow, lattice: Lattice) -> Vec<HalfInt> {
    grid.doubled_values()
        .map(HalfInt::from_doubled)
        .filter(|h| lattice.contains(*h))
        .collect()
}

/// `Δ^m_i [(a+j+b(s+i)) (a+j+s+i+b(k-i))]` at `i = 0`, built without the
/// module machinery.
pub fn aab_ll_oracle(m: usize) -> PolyScalar {
    let v = PolyScalar::var;
    let (a, b, j, s, k, i) = (v("a"), v("b"), v(INDEX_VAR), v(SECOND_VAR), v(FIRST_VAR), v("i"));
    let aj = &a + &j;
    let left = &aj + &(&b * &(&s + &i));
    let right = &(&aj + &(&s + &i)) + &(&b * &(&k - &i));
    (&left * &right).finite_difference("i", m).subst("i", &PolyScalar::zero())
}

/// Runs a named suite. Configuration problems are errors; check failures
/// are results.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let names: Vec<&str> = if name == "all" {
        SUITE_NAMES.iter().copied().filter(|n| *n != "all").collect()
    } else if SUITE_NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(Error::Config(format!("unknown suite `{name}`")));
    };
    let mut jobs = Vec::new();
    for n in names {
        for c in plan(n, cfg)? {
            jobs.push((n, c));
        }
    }
    let results: Vec<CheckResult> = jobs.par_iter().map(|(n, c)| execute(n, c, cfg)).collect();
    Ok(SuiteReport::new(name, results))
}
