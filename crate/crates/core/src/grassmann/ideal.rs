use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, signed_binomial, Rational};
use crate::superalg::HalfInt;

use super::ext::{ExtElement, ExtMonomial, OddWindow};

/// The relation `Ω̲_{r,s}^{(m)} = Σ_i (-1)^i C(m,i) G_{r-i} G_{s+i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Relation {
    pub r: HalfInt,
    pub s: HalfInt,
    pub m: usize,
}

impl Relation {
    pub fn letters(&self) -> impl Iterator<Item = HalfInt> + '_ {
        (0..=self.m as i64).flat_map(move |i| [self.r - HalfInt::int(i), self.s + HalfInt::int(i)])
    }

    pub fn ext(&self) -> ExtElement {
        let mut e = ExtElement::zero();
        for i in 0..=self.m {
            let step = HalfInt::int(i as i64);
            e.add_scaled(&signed_binomial(self.m, i), &ExtElement::from_letters(&[self.r - step, self.s + step]));
        }
        e
    }
}

/// One summand `c · left ∧ Ω̲ ∧ right` of a membership certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertTerm {
    pub coefficient: Rational,
    pub left: ExtMonomial,
    pub relation: Relation,
    pub right: ExtMonomial,
}

impl Serialize for CertTerm {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct View {
            coefficient: String,
            left: String,
            relation: (String, String, usize),
            right: String,
        }
        View {
            coefficient: format_rational(&self.coefficient),
            left: self.left.to_string(),
            relation: (self.relation.r.to_string(), self.relation.s.to_string(), self.relation.m),
            right: self.right.to_string(),
        }
        .serialize(ser)
    }
}

pub type Certificate = Vec<CertTerm>;

type CertMap = BTreeMap<(ExtMonomial, Relation), Rational>;

fn cert_add_scaled(acc: &mut CertMap, c: &Rational, other: &CertMap) {
    for (k, q) in other {
        let slot = acc.entry(k.clone()).or_insert_with(Rational::zero);
        *slot += c * q;
        if slot.is_zero() {
            acc.remove(k);
        }
    }
}

fn cert_list(map: CertMap) -> Certificate {
    map.into_iter()
        .map(|((left, relation), coefficient)| CertTerm {
            coefficient,
            left,
            relation,
            right: ExtMonomial::unit(),
        })
        .collect()
}

/// `Σ c · left ∧ Ω̲ ∧ right`.
pub fn expand_certificate(cert: &[CertTerm]) -> ExtElement {
    let mut out = ExtElement::zero();
    for t in cert {
        let prod = ExtElement::monomial(t.left.clone())
            .wedge(&t.relation.ext())
            .wedge(&ExtElement::monomial(t.right.clone()));
        out.add_scaled(&t.coefficient, &prod);
    }
    out
}

#[derive(Clone, Debug)]
struct Row {
    vec: ExtElement,
    cert: CertMap,
}

/// Echelon basis (one row per leading monomial, leading coefficient 1) of
/// the degree-`≤ cap` part of the ideal generated by the in-window relations.
///
/// The relations have degree 2 and are therefore central, so left multiples
/// by monomials already span the two-sided ideal.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    window: OddWindow,
    m: usize,
    cap: usize,
    relations: Vec<Relation>,
    pivots: BTreeMap<ExtMonomial, Row>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    /// Present when `member`.
    pub certificate: Option<Certificate>,
    /// Canonical text of the nonzero remainder otherwise.
    pub remainder: Option<String>,
}

fn monomials_of_degree(indices: &[HalfInt], d: usize) -> Vec<ExtMonomial> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(d);
    fn rec(indices: &[HalfInt], start: usize, d: usize, pick: &mut Vec<HalfInt>, out: &mut Vec<ExtMonomial>) {
        if pick.len() == d {
            out.push(ExtMonomial::from_letters(pick).expect("distinct").1);
            return;
        }
        for i in start..indices.len() {
            pick.push(indices[i]);
            rec(indices, i + 1, d, pick, out);
            pick.pop();
        }
    }
    rec(indices, 0, d, &mut pick, &mut out);
    out
}

/// All strictly increasing `d`-subsets of `indices` as monomials.
pub fn monomials(indices: &[HalfInt], d: usize) -> Vec<ExtMonomial> {
    let mut sorted = indices.to_vec();
    sorted.sort();
    sorted.dedup();
    monomials_of_degree(&sorted, d)
}

impl IdealBasis {
    pub fn window(&self) -> OddWindow {
        self.window
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rank_in_degree(&self, d: usize) -> usize {
        self.pivots.keys().filter(|k| k.degree() == d).count()
    }

    fn insert(&mut self, mut row: Row) {
        loop {
            let Some((lead, c)) = row.vec.leading().map(|(m, c)| (m.clone(), c.clone())) else {
                return;
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let f = -c;
                    row.vec.add_scaled(&f, &p.vec);
                    cert_add_scaled(&mut row.cert, &f, &p.cert);
                }
                None => {
                    let inv = Rational::one() / c;
                    row.vec = row.vec.scale(&inv);
                    let mut cert = CertMap::new();
                    cert_add_scaled(&mut cert, &inv, &row.cert);
                    row.cert = cert;
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    /// Reduces `x` by leading terms: membership with a certificate, or the
    /// nonzero remainder.
    pub fn member(&self, x: &ExtElement) -> Result<Membership> {
        let degree = x.max_degree();
        if degree > self.cap {
            return Err(Error::DegreeOverCap { degree, cap: self.cap });
        }
        let mut work = x.clone();
        let mut remainder = ExtElement::zero();
        let mut cert = CertMap::new();
        while let Some((lead, c)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(p) => {
                    work.add_scaled(&-c.clone(), &p.vec);
                    cert_add_scaled(&mut cert, &c, &p.cert);
                }
                None => {
                    work.add_term(lead.clone(), -c.clone());
                    remainder.add_term(lead, c);
                }
            }
        }
        Ok(if remainder.is_zero() {
            Membership {
                member: true,
                certificate: Some(cert_list(cert)),
                remainder: None,
            }
        } else {
            Membership {
                member: false,
                certificate: None,
                remainder: Some(remainder.to_string()),
            }
        })
    }
}

/// Builds the ideal slice from every `Ω̲_{r,s}^{(m)}` whose letters all lie
/// in `window`.
pub fn ideal_build(window: OddWindow, m: usize, cap: usize) -> Result<IdealBasis> {
    if cap > window.len() {
        return Err(Error::Grassmann(format!(
            "cap {cap} exceeds the window size {} (every monomial above it vanishes)",
            window.len()
        )));
    }
    let indices = window.indices();
    let mut relations = Vec::new();
    for &r in &indices {
        for &s in &indices {
            let rel = Relation { r, s, m };
            if rel.letters().all(|x| window.contains(x)) {
                relations.push(rel);
            }
        }
    }
    let mut basis = IdealBasis {
        window,
        m,
        cap,
        relations: relations.clone(),
        pivots: BTreeMap::new(),
    };
    for d in 2..=cap {
        for left in monomials_of_degree(&indices, d - 2) {
            for rel in &relations {
                let vec = ExtElement::monomial(left.clone()).wedge(&rel.ext());
                if vec.is_zero() {
                    continue;
                }
                let mut cert = CertMap::new();
                cert.insert((left.clone(), *rel), Rational::one());
                basis.insert(Row { vec, cert });
            }
        }
    }
    Ok(basis)
}

/// Convenience: membership of one monomial.
pub fn member(x: &ExtElement, ideal: &IdealBasis) -> Result<Membership> {
    ideal.member(x)
}
