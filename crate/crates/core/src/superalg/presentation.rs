use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::catalog::CatalogAlgebra;
use super::halfint::HalfInt;
use crate::error::{Error, ParseError, Result};
use crate::scalar::{format_rational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    /// Parity of a product.
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Koszul sign `(-1)^{|x||y|}` as a rational.
pub fn koszul(x: Parity, y: Parity) -> Rational {
    if x.is_odd() && y.is_odd() {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Index set of a generator family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    /// `ℤ`
    Integral,
    /// `ℤ + ½`
    HalfOdd,
    /// the single index 0 of a central element
    Central,
}

impl Lattice {
    pub fn contains(self, index: HalfInt) -> bool {
        match self {
            Lattice::Integral => index.is_integral(),
            Lattice::HalfOdd => !index.is_integral(),
            Lattice::Central => index == HalfInt::ZERO,
        }
    }

    /// `ℤ + ε` for `ε ∈ {0, ½}` given as doubled.
    pub fn shifted(epsilon_doubled: i64) -> Lattice {
        if epsilon_doubled.rem_euclid(2) == 0 {
            Lattice::Integral
        } else {
            Lattice::HalfOdd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Family {
    pub name: String,
    pub parity: Parity,
    pub lattice: Lattice,
}

impl Family {
    pub fn new(name: &str, parity: Parity, lattice: Lattice) -> Self {
        Self {
            name: name.to_string(),
            parity,
            lattice,
        }
    }

    pub fn central(name: &str) -> Self {
        Self::new(name, Parity::Even, Lattice::Central)
    }

    pub fn is_central(&self) -> bool {
        self.lattice == Lattice::Central
    }
}

/// A basis element `Family[index]`.
///
/// `family` is the family's rank in its presentation (central families
/// first, then declaration order), so the derived order is the PBW order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorRef {
    pub family: usize,
    pub index: HalfInt,
}

impl GeneratorRef {
    pub fn new(family: usize, index: HalfInt) -> Self {
        Self { family, index }
    }
}

/// Finite linear combination of generators; the right-hand side of a bracket.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BracketResult {
    terms: BTreeMap<GeneratorRef, Rational>,
}

impl BracketResult {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(c: Rational, g: GeneratorRef) -> Self {
        let mut r = Self::zero();
        r.add(c, g);
        r
    }

    pub fn add(&mut self, c: Rational, g: GeneratorRef) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &BracketResult) {
        for (g, q) in &other.terms {
            self.add(c * q, *g);
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut r = Self::zero();
        r.add_scaled(c, self);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorRef, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, g: &GeneratorRef) -> Rational {
        self.terms.get(g).cloned().unwrap_or_else(Rational::zero)
    }
}

/// Inclusive range of doubled degrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeWindow {
    pub lo2: i64,
    pub hi2: i64,
}

impl DegreeWindow {
    pub fn doubled(lo2: i64, hi2: i64) -> Self {
        Self { lo2, hi2 }
    }

    /// `[lo, hi]` in (undoubled) degrees.
    pub fn degrees(lo: i64, hi: i64) -> Self {
        Self {
            lo2: 2 * lo,
            hi2: 2 * hi,
        }
    }

    pub fn contains(&self, d: HalfInt) -> bool {
        self.lo2 <= d.doubled && d.doubled <= self.hi2
    }

    pub fn is_empty(&self) -> bool {
        self.lo2 > self.hi2
    }

    pub fn doubled_values(&self) -> impl Iterator<Item = i64> {
        self.lo2..=self.hi2
    }
}

impl fmt::Display for DegreeWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}]",
            HalfInt::from_doubled(self.lo2),
            HalfInt::from_doubled(self.hi2)
        )
    }
}

#[derive(Clone, Debug)]
pub(crate) enum BracketRule {
    Catalog(CatalogAlgebra),
    Table(BTreeMap<(GeneratorRef, GeneratorRef), BracketResult>),
}

/// A ½ℤ-graded Lie superalgebra given by generator families and a bracket
/// rule on basis elements.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    name: String,
    families: Vec<Family>,
    params: BTreeMap<String, Rational>,
    rule: BracketRule,
    notes: Vec<String>,
}

impl AlgebraPresentation {
    /// Families are reordered central-first (stable), which fixes the PBW order.
    pub(crate) fn new(
        name: &str,
        mut families: Vec<Family>,
        params: BTreeMap<String, Rational>,
        rule: BracketRule,
        notes: Vec<String>,
    ) -> Self {
        families.sort_by_key(|f| !f.is_central());
        Self {
            name: name.to_string(),
            families,
            params,
            rule,
            notes,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Name plus parameters; two presentations with equal keys are the same algebra.
    pub fn key(&self) -> String {
        let mut s = self.name.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(";{k}={}", format_rational(v)));
        }
        s
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, id: usize) -> &Family {
        &self.families[id]
    }

    pub fn family_id(&self, name: &str) -> Option<usize> {
        self.families.iter().position(|f| f.name == name)
    }

    pub fn params(&self) -> &BTreeMap<String, Rational> {
        &self.params
    }

    pub fn param(&self, name: &str) -> Option<&Rational> {
        self.params.get(name)
    }

    /// Conventions and assumptions recorded when the presentation was built.
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn catalog(&self) -> Option<&CatalogAlgebra> {
        match &self.rule {
            BracketRule::Catalog(c) => Some(c),
            BracketRule::Table(_) => None,
        }
    }

    pub fn parity(&self, g: GeneratorRef) -> Parity {
        self.families[g.family].parity
    }

    pub fn is_central(&self, g: GeneratorRef) -> bool {
        self.families[g.family].is_central()
    }

    pub fn degree(&self, g: GeneratorRef) -> HalfInt {
        if self.is_central(g) {
            HalfInt::ZERO
        } else {
            g.index
        }
    }

    pub fn has_odd_families(&self) -> bool {
        self.families.iter().any(|f| f.parity.is_odd())
    }

    /// Validated generator constructor.
    pub fn generator(&self, family: &str, index: HalfInt) -> Result<GeneratorRef> {
        let id = self
            .family_id(family)
            .ok_or_else(|| Error::UnknownGenerator(format!("{family}[{index}]"), self.name.clone()))?;
        if !self.families[id].lattice.contains(index) {
            return Err(Error::LatticeMismatch {
                family: family.to_string(),
                index: index.to_string(),
            });
        }
        Ok(GeneratorRef::new(id, index))
    }

    pub fn contains(&self, g: GeneratorRef) -> bool {
        g.family < self.families.len() && self.families[g.family].lattice.contains(g.index)
    }

    /// Parses `Family[index]`.
    pub fn parse_generator(&self, text: &str) -> std::result::Result<GeneratorRef, ParseError> {
        let t = text.trim();
        let lead = text.len() - text.trim_start().len();
        let open = t
            .find('[')
            .ok_or_else(|| ParseError::new(lead, "expected `Family[index]`"))?;
        if !t.ends_with(']') {
            return Err(ParseError::new(lead + t.len(), "expected `]`"));
        }
        let fam = &t[..open];
        let idx = &t[open + 1..t.len() - 1];
        let index = HalfInt::parse(idx).map_err(|e| e.shifted(lead + open + 1))?;
        let id = self
            .family_id(fam)
            .ok_or_else(|| ParseError::new(lead, format!("unknown family `{fam}` in `{}`", self.name)))?;
        if !self.families[id].lattice.contains(index) {
            return Err(ParseError::new(
                lead + open + 1,
                format!("index {index} is not in the lattice of `{fam}`"),
            ));
        }
        Ok(GeneratorRef::new(id, index))
    }

    pub fn format_generator(&self, g: GeneratorRef) -> String {
        format!("{}[{}]", self.families[g.family].name, g.index)
    }

    pub fn format_result(&self, r: &BracketResult) -> String {
        if r.is_zero() {
            return "0".to_string();
        }
        r.terms()
            .map(|(g, c)| format!("{} * {}", format_rational(c), self.format_generator(*g)))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// All generators whose doubled index lies in the window.
    pub fn generators_in(&self, window: DegreeWindow) -> Vec<GeneratorRef> {
        let mut out = Vec::new();
        for (id, fam) in self.families.iter().enumerate() {
            for d in window.doubled_values() {
                let idx = HalfInt::from_doubled(d);
                if fam.lattice.contains(idx) {
                    out.push(GeneratorRef::new(id, idx));
                }
            }
        }
        out
    }

    /// The structure-constant expansion of `[x, y]`.
    pub fn bracket(&self, x: GeneratorRef, y: GeneratorRef) -> BracketResult {
        if self.is_central(x) || self.is_central(y) {
            return BracketResult::zero();
        }
        match &self.rule {
            BracketRule::Catalog(c) => c.bracket(self, x, y),
            BracketRule::Table(t) => t.get(&(x, y)).cloned().unwrap_or_default(),
        }
    }

    /// Checked variant for user-supplied generators.
    pub fn try_bracket(&self, x: GeneratorRef, y: GeneratorRef) -> Result<BracketResult> {
        for g in [x, y] {
            if !self.contains(g) {
                return Err(Error::UnknownGenerator(
                    format!("#{}[{}]", g.family, g.index),
                    self.name.clone(),
                ));
            }
        }
        Ok(self.bracket(x, y))
    }

    /// `[x, Σ c_k g_k]` extended linearly in the second slot.
    pub fn bracket_left(&self, x: GeneratorRef, r: &BracketResult) -> BracketResult {
        let mut out = BracketResult::zero();
        for (g, c) in r.terms() {
            out.add_scaled(c, &self.bracket(x, *g));
        }
        out
    }

    /// `[Σ c_k g_k, z]` extended linearly in the first slot.
    pub fn bracket_right(&self, r: &BracketResult, z: GeneratorRef) -> BracketResult {
        let mut out = BracketResult::zero();
        for (g, c) in r.terms() {
            out.add_scaled(c, &self.bracket(*g, z));
        }
        out
    }
}
