use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, rat, PolyScalar, Rational};
use crate::superalg::{AlgebraPresentation, DegreeWindow, Lattice, Parity};

/// Generic basis index of a sector; coefficients are polynomials in it.
pub const INDEX_VAR: &str = "j";
/// Index of the acting generator inside an action rule.
pub const GEN_VAR: &str = "n";

pub const MODULE_NAMES: [&str; 7] = ["Aab", "Flambda", "Aabc", "Sab", "PiSab", "Aab_trivial_ext", "HalfS"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sector {
    pub name: String,
    pub parity: Parity,
    pub lattice: Lattice,
}

/// Action of one generator family on one sector: `X_n v_j = coeff(j, n) w_{j+n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ActionRule {
    Zero,
    Shift { coeff: PolyScalar, target: usize },
}

impl ActionRule {
    pub fn is_zero(&self) -> bool {
        match self {
            ActionRule::Zero => true,
            ActionRule::Shift { coeff, .. } => coeff.is_zero(),
        }
    }
}

/// A module parameter: left symbolic or fixed to a rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Symbolic,
    Value(Rational),
}

impl ParamValue {
    /// `sym` or a rational literal.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim() == "sym" {
            Ok(ParamValue::Symbolic)
        } else {
            Ok(ParamValue::Value(crate::scalar::parse_rational(text)?))
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Symbolic => f.write_str("sym"),
            ParamValue::Value(q) => f.write_str(&format_rational(q)),
        }
    }
}

/// A weight module given by single-shift action rules on sector-indexed
/// basis lines.
#[derive(Clone, Debug)]
pub struct WeightModuleSpec {
    pub(crate) name: String,
    pub(crate) algebra: Arc<AlgebraPresentation>,
    pub(crate) sectors: Vec<Sector>,
    pub(crate) params: BTreeMap<String, ParamValue>,
    pub(crate) rules: BTreeMap<(usize, usize), ActionRule>,
    pub(crate) parity_shift: bool,
    pub(crate) notes: Vec<String>,
}

impl WeightModuleSpec {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra(&self) -> &AlgebraPresentation {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> Arc<AlgebraPresentation> {
        self.algebra.clone()
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn sector_id(&self, name: &str) -> Option<usize> {
        self.sectors.iter().position(|s| s.name == name)
    }

    pub fn params(&self) -> &BTreeMap<String, ParamValue> {
        &self.params
    }

    pub fn parity_shift(&self) -> bool {
        self.parity_shift
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub(crate) fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// Rule of `family` on `sector`; families without a rule act as zero.
    pub fn rule(&self, family: usize, sector: usize) -> &ActionRule {
        self.rules.get(&(family, sector)).unwrap_or(&ActionRule::Zero)
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(usize, usize), &ActionRule)> {
        self.rules.iter()
    }

    pub fn is_fully_specialized(&self) -> bool {
        self.params.values().all(|p| matches!(p, ParamValue::Value(_)))
    }

    /// Fixes some symbolic parameters to rationals.
    pub fn specialize(&self, values: &BTreeMap<String, Rational>) -> Result<Self> {
        let mut out = self.clone();
        let mut bind = BTreeMap::new();
        for (k, v) in values {
            match out.params.get_mut(k) {
                Some(slot @ ParamValue::Symbolic) => {
                    *slot = ParamValue::Value(v.clone());
                    bind.insert(k.clone(), PolyScalar::constant(v.clone()));
                }
                Some(ParamValue::Value(_)) => {
                    return Err(Error::InvalidParameter(format!("parameter `{k}` is already fixed")))
                }
                None => return Err(Error::InvalidParameter(format!("module has no parameter `{k}`"))),
            }
        }
        for rule in out.rules.values_mut() {
            if let ActionRule::Shift { coeff, .. } = rule {
                *coeff = coeff.substitute_unchecked(&bind);
            }
        }
        Ok(out)
    }

    /// Structural invariants: parity bookkeeping, zero central action, and
    /// rule targets that respect the index lattices.
    pub(crate) fn validate(&self) -> Result<()> {
        for (&(fam, sec), rule) in &self.rules {
            let family = self.algebra.family(fam);
            let ActionRule::Shift { target, coeff } = rule else { continue };
            if family.is_central() && !coeff.is_zero() {
                return Err(Error::MalformedSpec(format!("central family {} acts nonzero", family.name)));
            }
            let src = &self.sectors[sec];
            let dst = self
                .sectors
                .get(*target)
                .ok_or_else(|| Error::MalformedSpec(format!("rule target #{target} out of range")))?;
            if src.parity.plus(family.parity) != dst.parity {
                return Err(Error::MalformedSpec(format!(
                    "{} maps sector {} to {} with the wrong parity",
                    family.name, src.name, dst.name
                )));
            }
            let shifted_ok = match (src.lattice, family.lattice, dst.lattice) {
                (Lattice::Integral, Lattice::Integral, d) | (Lattice::HalfOdd, Lattice::HalfOdd, d) => {
                    d == Lattice::Integral
                }
                (Lattice::Integral, Lattice::HalfOdd, d) | (Lattice::HalfOdd, Lattice::Integral, d) => {
                    d == Lattice::HalfOdd
                }
                _ => false,
            };
            if !shifted_ok {
                return Err(Error::MalformedSpec(format!(
                    "{} maps sector {} to {} across incompatible lattices",
                    family.name, src.name, dst.name
                )));
            }
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        let mut s = format!("{} over {}", self.name, self.algebra.key());
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s
    }
}

fn param_poly(params: &BTreeMap<String, ParamValue>, name: &str) -> PolyScalar {
    match params.get(name) {
        Some(ParamValue::Value(q)) => PolyScalar::constant(q.clone()),
        _ => PolyScalar::var(name),
    }
}

fn idx() -> PolyScalar {
    PolyScalar::var(INDEX_VAR)
}

fn gen_index() -> PolyScalar {
    PolyScalar::var(GEN_VAR)
}

/// `a + b n + j` with every variable declared.
fn intermediate(a: &PolyScalar, b: &PolyScalar) -> PolyScalar {
    &(a + &(b * &gen_index())) + &idx()
}

fn declare_all(p: PolyScalar) -> PolyScalar {
    p.declare(INDEX_VAR).declare(GEN_VAR)
}

struct Builder {
    name: String,
    algebra: Arc<AlgebraPresentation>,
    sectors: Vec<Sector>,
    params: BTreeMap<String, ParamValue>,
    rules: BTreeMap<(usize, usize), ActionRule>,
    parity_shift: bool,
    notes: Vec<String>,
}

impl Builder {
    fn rule(&mut self, family: &str, sector: usize, coeff: PolyScalar, target: usize) -> Result<()> {
        let fam = self.algebra.family_id(family).ok_or_else(|| Error::AlgebraMismatch {
            module: self.name.clone(),
            algebra: self.algebra.key(),
            reason: format!("missing family {family}"),
        })?;
        self.rules.insert(
            (fam, sector),
            ActionRule::Shift {
                coeff: declare_all(coeff),
                target,
            },
        );
        Ok(())
    }

    fn finish(self) -> Result<WeightModuleSpec> {
        let spec = WeightModuleSpec {
            name: self.name,
            algebra: self.algebra,
            sectors: self.sectors,
            params: self.params,
            rules: self.rules,
            parity_shift: self.parity_shift,
            notes: self.notes,
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn take_params(
    module: &str,
    allowed: &[&str],
    given: &BTreeMap<String, ParamValue>,
) -> Result<BTreeMap<String, ParamValue>> {
    for k in given.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::InvalidParameter(format!("module `{module}` has no parameter `{k}`")));
        }
    }
    Ok(allowed
        .iter()
        .map(|k| (k.to_string(), given.get(*k).cloned().unwrap_or(ParamValue::Symbolic)))
        .collect())
}

fn require(module: &str, alg: &AlgebraPresentation, names: &[&str]) -> Result<()> {
    if names.contains(&alg.name()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch {
            module: module.to_string(),
            algebra: alg.key(),
            reason: format!("expected one of {names:?}"),
        })
    }
}

fn odd_lattice(alg: &AlgebraPresentation, family: &str) -> Result<Lattice> {
    alg.family_id(family)
        .map(|id| alg.family(id).lattice)
        .ok_or_else(|| Error::InvalidParameter(format!("algebra {} has no family {family}", alg.key())))
}

/// Builds a catalog module. Missing parameters are symbolic.
///
/// `HalfS` is additionally gated by an axiom check over degrees `[-4, 4]`.
pub fn module_build(
    name: &str,
    algebra: Arc<AlgebraPresentation>,
    params: &BTreeMap<String, ParamValue>,
) -> Result<WeightModuleSpec> {
    let one_sector = |parity| {
        vec![Sector {
            name: "v".into(),
            parity,
            lattice: Lattice::Integral,
        }]
    };
    let mut b = Builder {
        name: name.to_string(),
        algebra: algebra.clone(),
        sectors: vec![],
        params: BTreeMap::new(),
        rules: BTreeMap::new(),
        parity_shift: false,
        notes: vec![],
    };
    match name {
        "Aab" | "Aab_trivial_ext" => {
            if name == "Aab" {
                require(name, &algebra, &["vir", "witt"])?;
            } else if algebra.family_id("L").is_none() {
                return Err(Error::AlgebraMismatch {
                    module: name.into(),
                    algebra: algebra.key(),
                    reason: "no L family".into(),
                });
            }
            b.params = take_params(name, &["a", "b"], params)?;
            b.sectors = one_sector(Parity::Even);
            let (a, bb) = (param_poly(&b.params, "a"), param_poly(&b.params, "b"));
            b.rule("L", 0, intermediate(&a, &bb), 0)?;
            if name == "Aab_trivial_ext" {
                b.notes.push("all families other than L act as zero".into());
            }
        }
        "Flambda" => {
            require(name, &algebra, &["vir", "witt"])?;
            b.params = take_params(name, &["lambda"], params)?;
            b.sectors = one_sector(Parity::Even);
            let l = param_poly(&b.params, "lambda");
            b.rule("L", 0, intermediate(&PolyScalar::zero(), &l), 0)?;
        }
        "Aabc" => {
            require(name, &algebra, &["q"])?;
            b.params = take_params(name, &["a", "b", "c"], params)?;
            b.sectors = one_sector(Parity::Even);
            let (a, bb, c) = (
                param_poly(&b.params, "a"),
                param_poly(&b.params, "b"),
                param_poly(&b.params, "c"),
            );
            b.rule("L", 0, intermediate(&a, &bb), 0)?;
            b.rule("H", 0, c, 0)?;
        }
        "Sab" | "PiSab" | "HalfS" => {
            if name == "HalfS" {
                require(name, &algebra, &["orw"])?;
            } else {
                require(name, &algebra, &["ns", "sw22"])?;
            }
            b.params = take_params(name, &["a", "b"], params)?;
            let (xp, yp) = if name == "PiSab" {
                (Parity::Odd, Parity::Even)
            } else {
                (Parity::Even, Parity::Odd)
            };
            b.parity_shift = name == "PiSab";
            b.sectors = vec![
                Sector { name: "x".into(), parity: xp, lattice: Lattice::Integral },
                Sector { name: "y".into(), parity: yp, lattice: odd_lattice(&algebra, "G")? },
            ];
            let (a, bb) = (param_poly(&b.params, "a"), param_poly(&b.params, "b"));
            let b_half = &bb + &PolyScalar::constant(rat(1, 2));
            b.rule("L", 0, intermediate(&a, &bb), 0)?;
            b.rule("L", 1, intermediate(&a, &b_half), 1)?;
            // G_r x_i = (a + i + 2 r b) y_{r+i}
            let two_b = bb.scale(&rat(2, 1));
            b.rule("G", 0, intermediate(&a, &two_b), 1)?;
            if name == "HalfS" {
                b.notes.push("S_{a,b} with the G-action on y set to zero".into());
            } else {
                b.rule("G", 1, PolyScalar::from_int(-1), 0)?;
            }
            if algebra.name() == "sw22" {
                b.notes.push("I and Q act as zero".into());
            }
        }
        other => return Err(Error::UnknownModule(other.to_string())),
    }
    let spec = b.finish()?;
    if name == "HalfS" {
        let rep = super::axioms::axiom_check(&spec, DegreeWindow::degrees(-4, 4))?;
        if !rep.passed() {
            let first = &rep.failures[0];
            return Err(Error::AxiomGate(
                name.into(),
                format!("{} {} on {}: {}", first.x, first.y, first.sector, first.residual),
            ));
        }
    }
    Ok(spec)
}
