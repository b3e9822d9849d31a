use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{format_rational, int, is_negative, signed_binomial, Rational};
use crate::error::{Error, Result};

/// A power product of named indeterminates, sorted by name, exponents > 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(String, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Self(vec![(name.to_string(), 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(String, u32)] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out: Vec<(String, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Self(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&self.0, &other.0))
    }
}

/// Graded-lex tie break with earlier names ranking higher (`a > b`).
fn lex_cmp(x: &[(String, u32)], y: &[(String, u32)]) -> Ordering {
    for (p, q) in x.iter().zip(y) {
        if p.0 != q.0 {
            return if p.0 < q.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            };
        }
        if p.1 != q.1 {
            return p.1.cmp(&q.1);
        }
    }
    x.len().cmp(&y.len())
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over an
/// open, name-keyed set of indeterminates.
///
/// Equality compares terms only; the declared indeterminate set records which
/// names may be substituted.
#[derive(Clone, Debug, Default)]
pub struct PolyScalar {
    vars: BTreeSet<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl PartialEq for PolyScalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for PolyScalar {}

impl PolyScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }

    /// The indeterminate `name`, declared.
    pub fn var(name: &str) -> Self {
        let mut p = Self::zero();
        p.vars.insert(name.to_string());
        p.terms.insert(Monomial::var(name), Rational::one());
        p
    }

    /// Adds `name` to the declared set without changing the value.
    pub fn declare(mut self, name: &str) -> Self {
        self.vars.insert(name.to_string());
        self
    }

    pub fn declared(&self) -> &BTreeSet<String> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponent(name))
            .max()
            .unwrap_or(0)
    }

    /// Names that actually occur in some term.
    pub fn support_vars(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        Self {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc.vars.extend(self.vars.iter().cloned());
        acc
    }

    /// Replaces bound indeterminates by polynomials. Unbound names stay
    /// symbolic; binding a name outside the declared set is an error.
    pub fn substitute(&self, bindings: &BTreeMap<String, PolyScalar>) -> Result<Self> {
        if let Some(unknown) = bindings.keys().find(|k| !self.vars.contains(*k)) {
            return Err(Error::UnknownIndeterminate(unknown.clone()));
        }
        Ok(self.substitute_unchecked(bindings))
    }

    pub(crate) fn substitute_unchecked(&self, bindings: &BTreeMap<String, PolyScalar>) -> Self {
        let mut vars: BTreeSet<String> = self
            .vars
            .iter()
            .filter(|v| !bindings.contains_key(*v))
            .cloned()
            .collect();
        for value in bindings.values() {
            vars.extend(value.vars.iter().cloned());
        }
        let mut out = Self {
            vars,
            terms: BTreeMap::new(),
        };
        let mut powers: BTreeMap<(String, u32), PolyScalar> = BTreeMap::new();
        for (mono, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut factor = PolyScalar::constant(c.clone());
            for (v, e) in &mono.0 {
                match bindings.get(v) {
                    Some(value) => {
                        let p = powers
                            .entry((v.clone(), *e))
                            .or_insert_with(|| value.pow(*e));
                        factor = &factor * p;
                    }
                    None => kept = kept.mul(&Monomial(vec![(v.clone(), *e)])),
                }
            }
            for (m, q) in factor.terms {
                out.add_term(m.mul(&kept), q);
            }
        }
        out
    }

    /// Single-name substitution; a name that is not declared leaves the
    /// polynomial unchanged.
    pub fn subst(&self, name: &str, value: &PolyScalar) -> Self {
        if !self.vars.contains(name) {
            return self.clone();
        }
        let mut b = BTreeMap::new();
        b.insert(name.to_string(), value.clone());
        self.substitute_unchecked(&b)
    }

    /// `sum_{i=0}^{m} (-1)^i C(m,i) p[var -> var + i]`.
    ///
    /// A name absent from the declared set is treated as a variable the
    /// polynomial does not depend on.
    pub fn finite_difference(&self, var: &str, m: usize) -> Self {
        let base = self.clone().declare(var);
        let mut acc = Self {
            vars: base.vars.clone(),
            terms: BTreeMap::new(),
        };
        for i in 0..=m {
            let shifted = base.subst(var, &(&PolyScalar::var(var) + &PolyScalar::from_int(i as i64)));
            acc = &acc + &shifted.scale(&signed_binomial(m, i));
        }
        acc
    }
}

impl From<Rational> for PolyScalar {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

fn union_vars(a: &PolyScalar, b: &PolyScalar) -> BTreeSet<String> {
    if b.vars.is_empty() {
        return a.vars.clone();
    }
    if a.vars.is_empty() {
        return b.vars.clone();
    }
    a.vars.union(&b.vars).cloned().collect()
}

impl Add for &PolyScalar {
    type Output = PolyScalar;
    fn add(self, rhs: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        out.vars = union_vars(self, rhs);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &PolyScalar {
    type Output = PolyScalar;
    fn sub(self, rhs: &PolyScalar) -> PolyScalar {
        let mut out = self.clone();
        out.vars = union_vars(self, rhs);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &PolyScalar {
    type Output = PolyScalar;
    fn mul(self, rhs: &PolyScalar) -> PolyScalar {
        let mut out = PolyScalar {
            vars: union_vars(self, rhs),
            terms: BTreeMap::new(),
        };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &PolyScalar {
    type Output = PolyScalar;
    fn neg(self) -> PolyScalar {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for PolyScalar {
            type Output = PolyScalar;
            fn $f(self, rhs: PolyScalar) -> PolyScalar {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for PolyScalar {
    /// Canonical text: highest terms first, e.g. `2*a^2*b - 1/2*a + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = is_negative(c);
            let mag = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if mono.0.is_empty() {
                f.write_str(&format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&mag))?;
            }
        }
        Ok(())
    }
}
