use serde::Serialize;

use crate::error::Result;
use crate::superalg::HalfInt;

use super::ext::{ExtElement, ExtMonomial, OddWindow};
use super::ideal::{expand_certificate, ideal_build, monomials, IdealBasis};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonMember {
    pub monomial: String,
    pub remainder: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma33Report {
    pub m: usize,
    pub k: usize,
    pub s: HalfInt,
    pub window: String,
    pub relations: usize,
    pub monomials_checked: usize,
    pub failures: Vec<NonMember>,
    /// Certificates whose expansion did not reproduce the monomial.
    pub unsound_certificates: Vec<String>,
    /// Every failure disappears on a window widened by `m + 1` on both sides.
    pub margin_limited: bool,
}

impl Lemma33Report {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.unsound_certificates.is_empty()
    }
}

/// The indices `{s, s+1, ..., s+n}`.
pub fn orbit(s: HalfInt, n: usize) -> Vec<HalfInt> {
    (0..=n as i64).map(|i| s + HalfInt::int(i)).collect()
}

fn check(ideal: &IdealBasis, targets: &[ExtMonomial]) -> Result<(Vec<NonMember>, Vec<String>)> {
    let mut failures = Vec::new();
    let mut unsound = Vec::new();
    for t in targets {
        let x = ExtElement::monomial(t.clone());
        let res = ideal.member(&x)?;
        match (res.member, res.certificate) {
            (true, Some(cert)) => {
                if expand_certificate(&cert) != x {
                    unsound.push(t.to_string());
                }
            }
            _ => failures.push(NonMember {
                monomial: t.to_string(),
                remainder: res.remainder.unwrap_or_default(),
            }),
        }
    }
    Ok((failures, unsound))
}

/// Certifies that every `(m+2)`-fold product of odd generators with indices
/// in `{s, ..., s+m+k}` lies in the ideal generated by the `Ω̲^{(m)}`
/// relations on the window `[s-m-1, s+m+k+1]`.
pub fn verify_lemma33(m: usize, k: usize, s: HalfInt) -> Result<Lemma33Report> {
    verify_lemma33_with_margin(m, k, s, m + 1)
}

/// As [`verify_lemma33`] with an explicit left/right margin.
pub fn verify_lemma33_with_margin(m: usize, k: usize, s: HalfInt, margin: usize) -> Result<Lemma33Report> {
    let n = m + k;
    let window = |extra: usize| {
        OddWindow::new(
            s - HalfInt::int((margin + extra) as i64),
            s + HalfInt::int((n + margin + extra) as i64),
        )
    };
    let ideal = ideal_build(window(0)?, m, m + 2)?;
    let targets = monomials(&orbit(s, n), m + 2);
    let (failures, unsound) = check(&ideal, &targets)?;
    let margin_limited = if failures.is_empty() {
        false
    } else {
        let wide = ideal_build(window(m + 1)?, m, m + 2)?;
        let retry: Vec<ExtMonomial> = targets
            .iter()
            .filter(|t| failures.iter().any(|f| f.monomial == t.to_string()))
            .cloned()
            .collect();
        check(&wide, &retry)?.0.is_empty()
    };
    Ok(Lemma33Report {
        m,
        k,
        s,
        window: window(0)?.to_string(),
        relations: ideal.relations().len(),
        monomials_checked: targets.len(),
        failures,
        unsound_certificates: unsound,
        margin_limited,
    })
}

/// First `degree`-monomial on `indices` that is not in the ideal.
pub fn first_non_member(ideal: &IdealBasis, indices: &[HalfInt], degree: usize) -> Result<Option<NonMember>> {
    for t in monomials(indices, degree) {
        let res = ideal.member(&ExtElement::monomial(t.clone()))?;
        if !res.member {
            return Ok(Some(NonMember {
                monomial: t.to_string(),
                remainder: res.remainder.unwrap_or_default(),
            }));
        }
    }
    Ok(None)
}
