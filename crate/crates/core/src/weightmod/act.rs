use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::pbw::{EnvElement, Word};
use crate::scalar::{PolyScalar, Rational};
use crate::superalg::{GeneratorRef, HalfInt};

use super::spec::{ActionRule, WeightModuleSpec, GEN_VAR, INDEX_VAR};

/// Image of the generic basis vector `v_j` of one sector: a combination of
/// `w_{j + offset}` over (sector, offset) with coefficients polynomial in `j`
/// and the module parameters.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicVector {
    entries: BTreeMap<(usize, HalfInt), PolyScalar>,
}

impl SymbolicVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, HalfInt), &PolyScalar)> {
        self.entries.iter()
    }

    pub fn coefficient(&self, sector: usize, offset: HalfInt) -> PolyScalar {
        self.entries.get(&(sector, offset)).cloned().unwrap_or_default()
    }

    pub(crate) fn add_entry(&mut self, sector: usize, offset: HalfInt, c: PolyScalar) {
        if c.is_zero() {
            return;
        }
        let key = (sector, offset);
        match self.entries.get_mut(&key) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.entries.remove(&key);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.entries.insert(key, c);
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &SymbolicVector) {
        for ((s, o), p) in &other.entries {
            self.add_entry(*s, *o, p.scale(c));
        }
    }

    /// Evaluates the generic index at `j`.
    pub fn at_index(&self, j: HalfInt) -> SymbolicVector {
        let mut out = SymbolicVector::zero();
        let value = PolyScalar::constant(j.to_rational());
        for ((s, o), p) in &self.entries {
            out.add_entry(*s, *o, p.subst(INDEX_VAR, &value));
        }
        out
    }

    pub fn format(&self, spec: &WeightModuleSpec) -> String {
        if self.entries.is_empty() {
            return "0".into();
        }
        self.entries
            .iter()
            .map(|((s, o), p)| format!("({p}) {}[j{:+}]", spec.sectors()[*s].name, o.to_rational()))
            .collect::<Vec<_>>()
            .join(" + ")
            .replace("+0]", "]")
    }
}

/// One generator applied to `coeff · w_{j+offset}` in `sector`.
pub(crate) fn act_letter(
    spec: &WeightModuleSpec,
    g: GeneratorRef,
    sector: usize,
    offset: HalfInt,
    coeff: &PolyScalar,
) -> Option<(usize, HalfInt, PolyScalar)> {
    let ActionRule::Shift { coeff: rule, target } = spec.rule(g.family, sector) else {
        return None;
    };
    let mut c = rule.subst(GEN_VAR, &PolyScalar::constant(g.index.to_rational()));
    if offset != HalfInt::ZERO {
        let shifted = &PolyScalar::var(INDEX_VAR) + &PolyScalar::constant(offset.to_rational());
        c = c.subst(INDEX_VAR, &shifted);
    }
    let c = coeff * &c;
    if c.is_zero() {
        return None;
    }
    Some((*target, offset + spec.algebra().degree(g), c))
}

/// Letters act right to left on `v_j` of `sector`.
pub(crate) fn act_word(spec: &WeightModuleSpec, w: &Word, sector: usize) -> Option<(usize, HalfInt, PolyScalar)> {
    let mut state = (sector, HalfInt::ZERO, PolyScalar::one());
    for g in w.letters().iter().rev() {
        state = act_letter(spec, *g, state.0, state.1, &state.2)?;
    }
    Some(state)
}

/// Exact image of the generic vector `v_j` of `sector` under `e`.
pub fn symbolic_act(spec: &WeightModuleSpec, e: &EnvElement, sector: usize) -> Result<SymbolicVector> {
    if !e.belongs_to(spec.algebra()) {
        return Err(Error::MixedPresentations(e.algebra_key().to_string(), spec.algebra().key()));
    }
    if sector >= spec.sectors().len() {
        return Err(Error::MalformedSpec(format!("no sector #{sector}")));
    }
    let mut out = SymbolicVector::zero();
    for (w, c) in e.terms() {
        for g in w.letters() {
            if !spec.algebra().contains(*g) {
                return Err(Error::MalformedSpec(format!("letter #{} not in algebra", g.family)));
            }
        }
        if let Some((s, o, p)) = act_word(spec, w, sector) {
            out.add_entry(s, o, &p * c);
        }
    }
    Ok(out)
}
