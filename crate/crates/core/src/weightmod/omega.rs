use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::pbw::{build_omega, OmegaKind};
use crate::scalar::{signed_binomial, PolyScalar};
use crate::superalg::{DegreeWindow, HalfInt};

use super::act::symbolic_act;
use super::spec::{ActionRule, WeightModuleSpec, GEN_VAR, INDEX_VAR};

/// Symbol for the free index of the left family in a symbolic Ω-scan.
pub const FIRST_VAR: &str = "k";
/// Symbol for the free index of the right family.
pub const SECOND_VAR: &str = "s";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaStep {
    pub m: usize,
    pub grid_passed: bool,
    /// `None` when the grid already failed.
    pub symbolic_passed: Option<bool>,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaScan {
    pub module: String,
    pub kind: OmegaKind,
    pub max_m: usize,
    pub grid: String,
    pub min_m: Option<usize>,
    pub steps: Vec<OmegaStep>,
}

/// Default sweep of the free indices, doubled.
pub const DEFAULT_GRID: DegreeWindow = DegreeWindow { lo2: -8, hi2: 8 };

fn family(spec: &WeightModuleSpec, name: &str) -> Result<usize> {
    spec.algebra()
        .family_id(name)
        .ok_or_else(|| Error::InvalidParameter(format!("algebra {} has no family {name}", spec.algebra().key())))
}

/// `Σ_i (-1)^i C(m,i) coefX(n=k-i, j=j+s+i) coefY(n=s+i, j)` per sector,
/// with `k` and `s` symbolic. Returns the sectors where it is nonzero.
pub fn symbolic_omega_residual(spec: &WeightModuleSpec, kind: OmegaKind, m: usize) -> Result<Vec<(String, PolyScalar)>> {
    let (fx, fy) = kind.families();
    let (fx, fy) = (family(spec, fx)?, family(spec, fy)?);
    let k = PolyScalar::var(FIRST_VAR);
    let s = PolyScalar::var(SECOND_VAR);
    let j = PolyScalar::var(INDEX_VAR);
    let mut out = Vec::new();
    for sector in 0..spec.sectors().len() {
        let ActionRule::Shift { coeff: cy, target: mid } = spec.rule(fy, sector) else { continue };
        let ActionRule::Shift { coeff: cx, .. } = spec.rule(fx, *mid) else { continue };
        let mut total = PolyScalar::zero();
        for i in 0..=m {
            let step = PolyScalar::from_int(i as i64);
            let ny = &s + &step;
            let nx = &k - &step;
            let y = cy.subst(GEN_VAR, &ny);
            let x = cx.subst(GEN_VAR, &nx).subst(INDEX_VAR, &(&j + &ny));
            total = &total + &(&x * &y).scale(&signed_binomial(m, i));
        }
        if !total.is_zero() {
            out.push((spec.sectors()[sector].name.clone(), total));
        }
    }
    Ok(out)
}

/// First grid point where `Ω^{(m)}` does not annihilate the generic vector.
fn grid_residual(spec: &WeightModuleSpec, kind: OmegaKind, m: usize, grid: DegreeWindow) -> Result<Option<String>> {
    let alg = spec.algebra();
    let (fx, fy) = kind.families();
    let (lx, ly) = (alg.family(family(spec, fx)?).lattice, alg.family(family(spec, fy)?).lattice);
    let mut points = Vec::new();
    for a in grid.doubled_values() {
        for b in grid.doubled_values() {
            let (first, s) = (HalfInt::from_doubled(a), HalfInt::from_doubled(b));
            if lx.contains(first) && ly.contains(s) {
                points.push((first, s));
            }
        }
    }
    let hits: Vec<Option<String>> = points
        .par_iter()
        .map(|&(first, s)| -> Result<Option<String>> {
            let e = build_omega(alg, kind, first, s, m)?;
            for sector in 0..spec.sectors().len() {
                let v = symbolic_act(spec, &e, sector)?;
                if !v.is_zero() {
                    return Ok(Some(format!(
                        "first={first} s={s} sector {}: {}",
                        spec.sectors()[sector].name,
                        v.format(spec)
                    )));
                }
            }
            Ok(None)
        })
        .collect::<Result<_>>()?;
    Ok(hits.into_iter().flatten().next())
}

/// Smallest `m ≤ max_m` for which `Ω^{(m)}` of the given kind annihilates
/// the module: zero on the whole index grid with `j` symbolic, then
/// confirmed with the free indices symbolic as well.
pub fn omega_min_m(spec: &WeightModuleSpec, kind: OmegaKind, max_m: usize, grid: DegreeWindow) -> Result<OmegaScan> {
    let mut steps = Vec::new();
    let mut min_m = None;
    for m in 0..=max_m {
        let step = match grid_residual(spec, kind, m, grid)? {
            Some(r) => OmegaStep {
                m,
                grid_passed: false,
                symbolic_passed: None,
                residual: Some(r),
            },
            None => {
                let sym = symbolic_omega_residual(spec, kind, m)?;
                OmegaStep {
                    m,
                    grid_passed: true,
                    symbolic_passed: Some(sym.is_empty()),
                    residual: sym.first().map(|(sec, p)| format!("sector {sec}: {p}")),
                }
            }
        };
        let ok = step.grid_passed && step.symbolic_passed == Some(true);
        steps.push(step);
        if ok {
            min_m = Some(m);
            break;
        }
    }
    Ok(OmegaScan {
        module: spec.describe(),
        kind,
        max_m,
        grid: grid.to_string(),
        min_m,
        steps,
    })
}
