use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pbw::EnvElement;
use crate::scalar::{format_rational, Rational};
use crate::superalg::{AlgebraPresentation, HalfInt};

/// An odd index range: doubled endpoints of the same parity, stepping by one
/// in undoubled terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OddWindow {
    pub lo2: i64,
    pub hi2: i64,
}

impl OddWindow {
    pub fn new(lo: HalfInt, hi: HalfInt) -> Result<Self> {
        Self::doubled(lo.doubled, hi.doubled)
    }

    pub fn doubled(lo2: i64, hi2: i64) -> Result<Self> {
        if (hi2 - lo2).rem_euclid(2) != 0 {
            return Err(Error::Grassmann(format!("window endpoints {lo2}/2, {hi2}/2 lie on different lattices")));
        }
        if lo2 > hi2 {
            return Err(Error::Grassmann("empty window".into()));
        }
        Ok(Self { lo2, hi2 })
    }

    pub fn contains(&self, r: HalfInt) -> bool {
        self.lo2 <= r.doubled && r.doubled <= self.hi2 && (r.doubled - self.lo2).rem_euclid(2) == 0
    }

    pub fn indices(&self) -> Vec<HalfInt> {
        (self.lo2..=self.hi2).step_by(2).map(HalfInt::from_doubled).collect()
    }

    pub fn len(&self) -> usize {
        ((self.hi2 - self.lo2) / 2 + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for OddWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}..{}}}", HalfInt::from_doubled(self.lo2), HalfInt::from_doubled(self.hi2))
    }
}

/// `G_{r_1} ∧ ... ∧ G_{r_k}` with strictly increasing indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ExtMonomial(Vec<HalfInt>);

impl Ord for ExtMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExtMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ExtMonomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    /// Sorts `letters` into a monomial; `None` on a repeated letter.
    pub fn from_letters(letters: &[HalfInt]) -> Option<(Rational, Self)> {
        let mut v = letters.to_vec();
        let mut sign = Rational::one();
        for i in 1..v.len() {
            let mut k = i;
            while k > 0 && v[k - 1] > v[k] {
                v.swap(k - 1, k);
                sign = -sign;
                k -= 1;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((sign, Self(v)))
    }

    pub fn indices(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Doubled sum of indices.
    pub fn weight2(&self) -> i64 {
        self.0.iter().map(|r| r.doubled).sum()
    }

    pub fn wedge(&self, other: &ExtMonomial) -> Option<(Rational, ExtMonomial)> {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Self::from_letters(&letters)
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|r| format!("G[{r}]")).collect();
        f.write_str(&parts.join("^"))
    }
}

/// Element of the exterior algebra on odd generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ExtElement {
    terms: BTreeMap<ExtMonomial, Rational>,
}

impl ExtElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(m: ExtMonomial) -> Self {
        let mut e = Self::zero();
        e.add_term(m, Rational::one());
        e
    }

    pub fn from_letters(letters: &[HalfInt]) -> Self {
        match ExtMonomial::from_letters(letters) {
            Some((sign, m)) => {
                let mut e = Self::zero();
                e.add_term(m, sign);
                e
            }
            None => Self::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExtMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ExtMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<(&ExtMonomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(ExtMonomial::degree).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: ExtMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Rational, other: &ExtElement) {
        for (m, q) in &other.terms {
            self.add_term(m.clone(), c * q);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        out.add_scaled(c, self);
        out
    }

    pub fn wedge(&self, other: &ExtElement) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((sign, m)) = m1.wedge(m2) {
                    out.add_term(m, sign * c1 * c2);
                }
            }
        }
        out
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{} * {m}", format_rational(c)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Image of an enveloping-algebra element of the odd part in the exterior
/// algebra (the odd part is abelian).
pub fn ext_inject(alg: &AlgebraPresentation, e: &EnvElement, window: OddWindow) -> Result<ExtElement> {
    if !e.belongs_to(alg) {
        return Err(Error::MixedPresentations(e.algebra_key().to_string(), alg.key()));
    }
    let mut out = ExtElement::zero();
    for (w, c) in e.terms() {
        let c = c
            .as_constant()
            .ok_or_else(|| Error::Grassmann(format!("non-constant coefficient {c}")))?;
        let mut letters = Vec::with_capacity(w.len());
        for g in w.letters() {
            let name = &alg.family(g.family).name;
            if !alg.parity(*g).is_odd() {
                return Err(Error::Grassmann(format!("{} is not odd", alg.format_generator(*g))));
            }
            if name != "G" {
                return Err(Error::Grassmann(format!("{} is not a G letter", alg.format_generator(*g))));
            }
            if !window.contains(g.index) {
                return Err(Error::Grassmann(format!(
                    "{} lies outside window {window}",
                    alg.format_generator(*g)
                )));
            }
            letters.push(g.index);
        }
        if let Some((sign, m)) = ExtMonomial::from_letters(&letters) {
            out.add_term(m, sign * c);
        }
    }
    Ok(out)
}
