use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::rat;
use crate::superalg::DegreeWindow;

use super::axioms::axiom_check;
use super::spec::{ActionRule, WeightModuleSpec};

/// A sign twist: each flag negates one family's rule on one sector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Twist {
    pub flags: Vec<String>,
}

impl Twist {
    pub fn label(&self) -> String {
        if self.flags.is_empty() {
            "identity".into()
        } else {
            self.flags.join("+")
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PinReport {
    pub module: String,
    pub window: String,
    pub candidates: usize,
    pub passing: Vec<String>,
    pub twist: String,
}

/// (label, family id, sector id) of every independent sign flip.
///
/// The even family `L` may be negated per sector (this is the orientation
/// `(m-n)` vs `(n-m)` of the bracket seen by that sector). For an odd family
/// only the rules after the first nonzero one are flipped: negating all of
/// them at once is the automorphism `G ↦ -G`.
fn flip_sites(spec: &WeightModuleSpec) -> Vec<(String, usize, usize)> {
    let alg = spec.algebra();
    let mut sites = Vec::new();
    for (fam_id, fam) in alg.families().iter().enumerate() {
        if fam.is_central() {
            continue;
        }
        let live: Vec<usize> = (0..spec.sectors().len())
            .filter(|&s| !spec.rule(fam_id, s).is_zero())
            .collect();
        if fam.name == "L" {
            for s in live {
                sites.push((format!("orient:{}", spec.sectors()[s].name), fam_id, s));
            }
        } else if fam.parity.is_odd() {
            for s in live.into_iter().skip(1) {
                sites.push((format!("flip:{}@{}", fam.name, spec.sectors()[s].name), fam_id, s));
            }
        }
    }
    sites
}

/// Negates the rule of `family` on `sector`.
pub fn negate_rule(spec: &WeightModuleSpec, family: usize, sector: usize) -> WeightModuleSpec {
    let mut out = spec.clone();
    if let Some(ActionRule::Shift { coeff, .. }) = out.rules.get_mut(&(family, sector)) {
        *coeff = coeff.scale(&rat(-1, 1));
    }
    out
}

/// Applies a flag set by label; unknown labels are an error.
pub fn apply_twist(spec: &WeightModuleSpec, twist: &Twist) -> Result<WeightModuleSpec> {
    let sites = flip_sites(spec);
    let mut out = spec.clone();
    for flag in &twist.flags {
        let (_, f, s) = sites
            .iter()
            .find(|(l, _, _)| l == flag)
            .ok_or_else(|| Error::Pinning(format!("unknown twist flag `{flag}`")))?;
        out = negate_rule(&out, *f, *s);
    }
    Ok(out)
}

/// Searches all sign twists and returns the unique one under which the
/// module axioms hold on `window`.
pub fn pin_sign_convention(spec: &WeightModuleSpec, window: DegreeWindow) -> Result<(WeightModuleSpec, PinReport)> {
    let sites = flip_sites(spec);
    if sites.len() > 12 {
        return Err(Error::Pinning(format!("{} flip sites is too many to enumerate", sites.len())));
    }
    let candidates: Vec<Twist> = (0u32..1 << sites.len())
        .map(|mask| Twist {
            flags: sites
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, (l, _, _))| l.clone())
                .collect(),
        })
        .collect();
    let results: Vec<(Twist, WeightModuleSpec, super::axioms::AxiomReport)> = candidates
        .into_par_iter()
        .map(|t| {
            let twisted = apply_twist(spec, &t)?;
            let rep = axiom_check(&twisted, window)?;
            Ok((t, twisted, rep))
        })
        .collect::<Result<_>>()?;
    let total = results.len();
    let passing: Vec<_> = results.iter().filter(|(_, _, r)| r.passed()).collect();
    match passing.as_slice() {
        [(t, twisted, _)] => {
            let mut pinned = twisted.clone();
            if !t.flags.is_empty() {
                pinned.note(format!("sign convention pinned by twist {}", t.label()));
            }
            let report = PinReport {
                module: spec.describe(),
                window: window.to_string(),
                candidates: total,
                passing: vec![t.label()],
                twist: t.label(),
            };
            Ok((pinned, report))
        }
        [] => {
            let detail = results
                .iter()
                .map(|(t, _, r)| {
                    let f = &r.failures[0];
                    format!("{}: {} {} on {}: {}", t.label(), f.x, f.y, f.sector, f.residual)
                })
                .collect::<Vec<_>>()
                .join("; ");
            Err(Error::Pinning(format!("inconsistent as printed ({detail})")))
        }
        many => Err(Error::Pinning(format!(
            "{} twists pass: {}",
            many.len(),
            many.iter().map(|(t, _, _)| t.label()).collect::<Vec<_>>().join(", ")
        ))),
    }
}
