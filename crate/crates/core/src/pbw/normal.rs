use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::scalar::{rat, PolyScalar};
use crate::superalg::{koszul, AlgebraPresentation, GeneratorRef};

use super::element::{EnvElement, Word};

/// Leftmost position where the word is not in PBW order: a descent, or a
/// repeated odd letter.
fn first_violation(alg: &AlgebraPresentation, w: &[GeneratorRef]) -> Option<usize> {
    w.windows(2).position(|p| {
        p[0] > p[1] || (p[0] == p[1] && alg.parity(p[0]).is_odd())
    })
}

fn splice(w: &[GeneratorRef], i: usize, mid: &[GeneratorRef]) -> Word {
    let mut v = Vec::with_capacity(w.len() - 2 + mid.len());
    v.extend_from_slice(&w[..i]);
    v.extend_from_slice(mid);
    v.extend_from_slice(&w[i + 2..]);
    Word(v)
}

fn accumulate(map: &mut BTreeMap<Word, PolyScalar>, w: Word, c: PolyScalar) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&w) {
        Some(slot) => {
            let sum = &*slot + &c;
            if sum.is_zero() {
                map.remove(&w);
            } else {
                *slot = sum;
            }
        }
        None => {
            map.insert(w, c);
        }
    }
}

/// PBW normal form with respect to the presentation's generator order.
///
/// Out-of-order adjacent pairs are rewritten `x·y → (-1)^{|x||y|} y·x + [x,y]`
/// and repeated odd letters `x·x → ½[x,x]`, always at the leftmost violation.
/// Every rewrite lowers (length, inversions), so the loop terminates.
pub fn normal_form(alg: &AlgebraPresentation, e: &EnvElement) -> Result<EnvElement> {
    if !e.belongs_to(alg) {
        return Err(Error::MixedPresentations(e.algebra_key().to_string(), alg.key()));
    }
    let half = rat(1, 2);
    let mut pending: BTreeMap<Word, PolyScalar> = e.clone().into_terms();
    let mut done: BTreeMap<Word, PolyScalar> = BTreeMap::new();
    while let Some((w, c)) = pending.pop_last() {
        let letters = w.letters();
        let Some(i) = first_violation(alg, letters) else {
            accumulate(&mut done, w, c);
            continue;
        };
        let (x, y) = (letters[i], letters[i + 1]);
        if x == y {
            for (g, q) in alg.bracket(x, x).terms() {
                accumulate(&mut pending, splice(letters, i, &[*g]), c.scale(&(q * &half)));
            }
            continue;
        }
        accumulate(
            &mut pending,
            splice(letters, i, &[y, x]),
            c.scale(&koszul(alg.parity(x), alg.parity(y))),
        );
        for (g, q) in alg.bracket(x, y).terms() {
            accumulate(&mut pending, splice(letters, i, &[*g]), c.scale(q));
        }
    }
    Ok(e.with_terms(done))
}

/// Whether every word of `e` is already in PBW order.
pub fn is_normal(alg: &AlgebraPresentation, e: &EnvElement) -> bool {
    e.terms().all(|(w, _)| first_violation(alg, w.letters()).is_none())
}

/// `NF(e1 - e2) == 0`.
pub fn element_equal(alg: &AlgebraPresentation, e1: &EnvElement, e2: &EnvElement) -> Result<bool> {
    Ok(normal_form(alg, &e1.sub(e2)?)?.is_zero())
}
