use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{format_rational, PolyScalar, Rational};
use crate::superalg::{AlgebraPresentation, GeneratorRef, Parity};

/// An ordered product of generators.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<GeneratorRef>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[GeneratorRef] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn parity(&self, alg: &AlgebraPresentation) -> Parity {
        self.0
            .iter()
            .fold(Parity::Even, |p, g| p.plus(alg.parity(*g)))
    }

    pub fn format(&self, alg: &AlgebraPresentation) -> String {
        self.0
            .iter()
            .map(|g| alg.format_generator(*g))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl From<Vec<GeneratorRef>> for Word {
    fn from(v: Vec<GeneratorRef>) -> Self {
        Word(v)
    }
}

/// Element of the universal enveloping algebra: a finite sum of words with
/// polynomial coefficients, tied to one presentation.
#[derive(Clone, Debug)]
pub struct EnvElement {
    algebra: Arc<str>,
    terms: BTreeMap<Word, PolyScalar>,
}

impl PartialEq for EnvElement {
    /// Term-wise equality of the stored (not necessarily normal) form.
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.terms == other.terms
    }
}

impl EnvElement {
    pub fn zero(alg: &AlgebraPresentation) -> Self {
        Self {
            algebra: Arc::from(alg.key()),
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn zero_like(&self) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(alg: &AlgebraPresentation, g: GeneratorRef) -> Self {
        Self::word(alg, Word(vec![g]), PolyScalar::one())
    }

    pub fn word(alg: &AlgebraPresentation, w: Word, c: PolyScalar) -> Self {
        let mut e = Self::zero(alg);
        e.add_term(w, c);
        e
    }

    /// Builds from `(coefficient, letters)` pairs, merging repeated words.
    pub fn from_terms<I>(alg: &AlgebraPresentation, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Vec<GeneratorRef>)>,
    {
        let mut e = Self::zero(alg);
        for (c, w) in terms {
            e.add_term(Word(w), PolyScalar::constant(c));
        }
        e
    }

    pub fn algebra_key(&self) -> &str {
        &self.algebra
    }

    pub fn belongs_to(&self, alg: &AlgebraPresentation) -> bool {
        *self.algebra == *alg.key()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &PolyScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &Word) -> PolyScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: PolyScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, PolyScalar> {
        self.terms
    }

    pub(crate) fn with_terms(&self, terms: BTreeMap<Word, PolyScalar>) -> Self {
        Self {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::MixedPresentations(
                self.algebra.to_string(),
                other.algebra.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = self.zero_like();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, c: &PolyScalar) -> Self {
        let mut out = self.zero_like();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p * c);
        }
        out
    }

    /// Free (concatenation) product; no straightening.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        let mut out = self.zero_like();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        Ok(out)
    }

    /// Canonical text `c * Fam[i] Fam[j] + ...`; non-constant coefficients are
    /// parenthesised.
    pub fn format(&self, alg: &AlgebraPresentation) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let coeff = match c.as_constant() {
                    Some(q) => format_rational(&q),
                    None => format!("({c})"),
                };
                if w.is_empty() {
                    coeff
                } else {
                    format!("{coeff} * {}", w.format(alg))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `e1 · e2` over `alg`.
pub fn env_mul(alg: &AlgebraPresentation, e1: &EnvElement, e2: &EnvElement) -> Result<EnvElement> {
    for e in [e1, e2] {
        if !e.belongs_to(alg) {
            return Err(Error::MixedPresentations(e.algebra_key().to_string(), alg.key()));
        }
    }
    e1.mul(e2)
}
