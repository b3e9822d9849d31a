use rayon::prelude::*;
use serde::Serialize;

use crate::pbw::Word;
use crate::scalar::PolyScalar;
use crate::superalg::{koszul, DegreeWindow, GeneratorRef, HalfInt};

use super::act::{act_letter, act_word, SymbolicVector};
use super::spec::WeightModuleSpec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub x: String,
    pub y: String,
    pub sector: String,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub module: String,
    pub window: String,
    pub pairs_checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `x(y v_j) - (-1)^{|x||y|} y(x v_j) - [x,y] v_j` for the generic `v_j`.
pub fn pair_residual(spec: &WeightModuleSpec, x: GeneratorRef, y: GeneratorRef, sector: usize) -> SymbolicVector {
    let alg = spec.algebra();
    let mut out = SymbolicVector::zero();
    if let Some((s, o, c)) = act_word(spec, &Word(vec![x, y]), sector) {
        out.add_entry(s, o, c);
    }
    if let Some((s, o, c)) = act_word(spec, &Word(vec![y, x]), sector) {
        out.add_entry(s, o, c.scale(&-koszul(alg.parity(x), alg.parity(y))));
    }
    for (g, q) in alg.bracket(x, y).terms() {
        if let Some((s, o, c)) = act_letter(spec, *g, sector, HalfInt::ZERO, &PolyScalar::one()) {
            out.add_entry(s, o, c.scale(&-q.clone()));
        }
    }
    out
}

/// Checks the super-module relation for every unordered generator pair with
/// degrees in `window`, on every sector, as polynomial identities in `j` and
/// the free parameters.
pub fn axiom_check(spec: &WeightModuleSpec, window: DegreeWindow) -> crate::Result<AxiomReport> {
    let gens = spec.algebra().generators_in(window);
    let mut jobs = Vec::new();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[i..] {
            jobs.push((x, y));
        }
    }
    let alg = spec.algebra();
    let failures: Vec<AxiomFailure> = jobs
        .par_iter()
        .flat_map_iter(|&(x, y)| {
            (0..spec.sectors().len()).filter_map(move |s| {
                let r = pair_residual(spec, x, y, s);
                (!r.is_zero()).then(|| AxiomFailure {
                    x: alg.format_generator(x),
                    y: alg.format_generator(y),
                    sector: spec.sectors()[s].name.clone(),
                    residual: r.format(spec),
                })
            })
        })
        .collect();
    Ok(AxiomReport {
        module: spec.describe(),
        window: window.to_string(),
        pairs_checked: jobs.len(),
        failures,
    })
}
