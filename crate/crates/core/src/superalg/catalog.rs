//! Built-in presentations. Each table is stored exactly as printed in its
//! source, including its own orientation and central-term convention; the
//! Jacobi checker is the arbiter of consistency.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::halfint::HalfInt;
use super::presentation::{
    koszul, AlgebraPresentation, BracketResult, BracketRule, Family, GeneratorRef, Lattice, Parity,
};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, rat, Rational};

pub const CATALOG_NAMES: [&str; 7] = ["vir", "witt", "orw", "q", "bms3", "sw22", "ns"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogAlgebra {
    /// Virasoro: `[L_m,L_n] = (n-m)L_{m+n} + δ (m³-m)/12 C`.
    Vir,
    Witt,
    /// Ovsienko–Roger `Vir ⋉ F_λ` with odd indices in `ℤ + ε`.
    Orw { lambda: Rational, epsilon_doubled: i64 },
    Q,
    Bms3,
    Sw22,
    /// N=1 Neveu–Schwarz, in the `L, G` conventions of the super W(2,2) table.
    Ns,
}

type Raw = Vec<(Rational, &'static str, HalfInt)>;

fn delta(sum: HalfInt) -> bool {
    sum == HalfInt::ZERO
}

fn cube_minus(m: &Rational) -> Rational {
    m * m * m - m
}

impl CatalogAlgebra {
    /// Listed orientation of each table; `None` for pairs that follow by
    /// super-antisymmetry.
    fn raw(&self, fx: &str, m: HalfInt, fy: &str, n: HalfInt) -> Option<Raw> {
        let mq = m.to_rational();
        let nq = n.to_rational();
        let s = m + n;
        let twelfth = rat(1, 12);
        let third = rat(1, 3);
        let quarter = rat(1, 4);
        let half = rat(1, 2);
        match self {
            CatalogAlgebra::Vir | CatalogAlgebra::Witt => match (fx, fy) {
                ("L", "L") => {
                    let mut out = vec![(&nq - &mq, "L", s)];
                    if *self == CatalogAlgebra::Vir && delta(s) {
                        out.push((&twelfth * cube_minus(&mq), "C", HalfInt::ZERO));
                    }
                    Some(out)
                }
                _ => None,
            },
            CatalogAlgebra::Orw { lambda, .. } => match (fx, fy) {
                ("L", "L") => {
                    let mut out = vec![(&nq - &mq, "L", s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&nq), "C", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("L", "G") => Some(vec![(&nq + lambda * &mq, "G", s)]),
                ("G", "G") => Some(vec![]),
                _ => None,
            },
            CatalogAlgebra::Q => match (fx, fy) {
                ("L", "L") => {
                    let mut out = vec![(&nq - &mq, "L", s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&nq), "C", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("H", "H") => Some(if delta(s) {
                    vec![(&third * &mq, "C", HalfInt::ZERO)]
                } else {
                    vec![]
                }),
                ("L", "H") => Some(vec![(nq, "H", s)]),
                ("L", "G") => Some(vec![(&nq - &half * &mq, "G", s)]),
                ("H", "G") => Some(vec![(int(1), "G", s)]),
                ("G", "G") => Some(vec![]),
                _ => None,
            },
            CatalogAlgebra::Bms3 => match (fx, fy) {
                ("L", "L") | ("L", "I") => {
                    let (target, central) = if fy == "L" { ("L", "C1") } else { ("I", "C2") };
                    let mut out = vec![(&mq - &nq, target, s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&mq), central, HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("Q", "Q") => {
                    let mut out = vec![(int(2), "I", s)];
                    if delta(s) {
                        out.push((&third * (&mq * &mq - &quarter), "C2", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("L", "Q") => Some(vec![(&half * &mq - &nq, "Q", s)]),
                ("I", "I") | ("I", "Q") => Some(vec![]),
                _ => None,
            },
            CatalogAlgebra::Sw22 => match (fx, fy) {
                ("L", "L") => {
                    let mut out = vec![(&mq - &nq, "L", s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&mq), "C1", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("L", "I") => {
                    let mut out = vec![(&nq - &mq, "I", s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&mq), "C2", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("G", "G") | ("G", "Q") => {
                    let (target, central) = if fy == "G" { ("L", "C1") } else { ("I", "C2") };
                    let mut out = vec![(int(2), target, s)];
                    if delta(s) {
                        out.push((&third * (&mq * &mq - &quarter), central, HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("L", "G") => Some(vec![(&half * &mq - &nq, "G", s)]),
                ("L", "Q") | ("I", "G") => Some(vec![(&half * &mq - &nq, "Q", s)]),
                ("I", "I") | ("I", "Q") | ("Q", "Q") => Some(vec![]),
                _ => None,
            },
            CatalogAlgebra::Ns => match (fx, fy) {
                ("L", "L") => {
                    let mut out = vec![(&mq - &nq, "L", s)];
                    if delta(s) {
                        out.push((&twelfth * cube_minus(&mq), "C", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("G", "G") => {
                    let mut out = vec![(int(2), "L", s)];
                    if delta(s) {
                        out.push((&third * (&mq * &mq - &quarter), "C", HalfInt::ZERO));
                    }
                    Some(out)
                }
                ("L", "G") => Some(vec![(&half * &mq - &nq, "G", s)]),
                _ => None,
            },
        }
    }

    pub(crate) fn bracket(
        &self,
        pres: &AlgebraPresentation,
        x: GeneratorRef,
        y: GeneratorRef,
    ) -> BracketResult {
        let fx = pres.family(x.family).name.as_str();
        let fy = pres.family(y.family).name.as_str();
        let (raw, sign) = match self.raw(fx, x.index, fy, y.index) {
            Some(r) => (r, None),
            None => match self.raw(fy, y.index, fx, x.index) {
                // [y, x] = -(-1)^{|x||y|} [x, y]
                Some(r) => (r, Some(-koszul(pres.parity(x), pres.parity(y)))),
                None => return BracketResult::zero(),
            },
        };
        let mut out = BracketResult::zero();
        for (c, fam, idx) in raw {
            if c.is_zero() {
                continue;
            }
            let id = pres
                .family_id(fam)
                .expect("catalog table references its own families");
            let c = match &sign {
                Some(sg) => c * sg,
                None => c,
            };
            out.add(c, GeneratorRef::new(id, idx));
        }
        out
    }
}

fn orw_params(params: &BTreeMap<String, Rational>) -> Result<(Rational, i64)> {
    for k in params.keys() {
        if k != "lambda" && k != "epsilon" {
            return Err(Error::InvalidParameter(format!("orw takes lambda and epsilon, not `{k}`")));
        }
    }
    let lambda = params.get("lambda").cloned().unwrap_or_else(|| rat(-1, 2));
    let epsilon = params.get("epsilon").cloned().unwrap_or_else(|| rat(1, 2));
    let eps2 = if epsilon.is_zero() {
        0
    } else if epsilon == rat(1, 2) {
        1
    } else {
        return Err(Error::InvalidParameter(format!(
            "epsilon must be 0 or 1/2, got {}",
            format_rational(&epsilon)
        )));
    };
    Ok((lambda, eps2))
}

/// Builds a catalog presentation by name.
///
/// `orw` reads `lambda` (default `-1/2`) and `epsilon ∈ {0, 1/2}` (default `1/2`);
/// the other entries take no parameters.
pub fn catalog_build(name: &str, params: &BTreeMap<String, Rational>) -> Result<AlgebraPresentation> {
    use Lattice::*;
    use Parity::*;
    let no_params = || -> Result<()> {
        match params.keys().next() {
            Some(k) => Err(Error::InvalidParameter(format!("`{name}` takes no parameter `{k}`"))),
            None => Ok(()),
        }
    };
    let pres = match name {
        "vir" => {
            no_params()?;
            AlgebraPresentation::new(
                "vir",
                vec![Family::new("L", Even, Integral), Family::central("C")],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Vir),
                vec![],
            )
        }
        "witt" => {
            no_params()?;
            AlgebraPresentation::new(
                "witt",
                vec![Family::new("L", Even, Integral)],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Witt),
                vec![],
            )
        }
        "orw" => {
            let (lambda, eps2) = orw_params(params)?;
            let mut p = BTreeMap::new();
            p.insert("lambda".to_string(), lambda.clone());
            p.insert("epsilon".to_string(), rat(eps2, 2));
            AlgebraPresentation::new(
                "orw",
                vec![
                    Family::new("L", Even, Integral),
                    Family::new("G", Odd, Lattice::shifted(eps2)),
                    Family::central("C"),
                ],
                p,
                BracketRule::Catalog(CatalogAlgebra::Orw {
                    lambda,
                    epsilon_doubled: eps2,
                }),
                vec!["[L_m,G_r] = (r + lambda*m) G_{r+m}; central term uses (n^3-n)/12".to_string()],
            )
        }
        "q" => {
            no_params()?;
            AlgebraPresentation::new(
                "q",
                vec![
                    Family::new("L", Even, Integral),
                    Family::new("H", Even, Integral),
                    Family::new("G", Odd, HalfOdd),
                    Family::central("C"),
                ],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Q),
                vec!["[L_m,L_n] central term (n^3-n)/12 C carries the Kronecker delta δ_{m+n,0} required by the grading".to_string()],
            )
        }
        "bms3" => {
            no_params()?;
            AlgebraPresentation::new(
                "bms3",
                vec![
                    Family::new("L", Even, Integral),
                    Family::new("I", Even, Integral),
                    Family::new("Q", Odd, HalfOdd),
                    Family::central("C1"),
                    Family::central("C2"),
                ],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Bms3),
                vec!["relation [M_n,Q_r]=0 read as [I_n,Q_r]=0".to_string()],
            )
        }
        "sw22" => {
            no_params()?;
            AlgebraPresentation::new(
                "sw22",
                vec![
                    Family::new("L", Even, Integral),
                    Family::new("I", Even, Integral),
                    Family::new("G", Odd, HalfOdd),
                    Family::new("Q", Odd, HalfOdd),
                    Family::central("C1"),
                    Family::central("C2"),
                ],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Sw22),
                vec![
                    "[I_m,Q_r] is not listed; taken as 0".to_string(),
                    "[I_m,I_n] and [Q_r,Q_s] are not listed; taken as 0".to_string(),
                    "table kept as printed, including [L_m,I_n]=(n-m)I_{m+n} next to [L_m,L_n]=(m-n)L_{m+n}".to_string(),
                ],
            )
        }
        "ns" => {
            no_params()?;
            AlgebraPresentation::new(
                "ns",
                vec![
                    Family::new("L", Even, Integral),
                    Family::new("G", Odd, HalfOdd),
                    Family::central("C"),
                ],
                BTreeMap::new(),
                BracketRule::Catalog(CatalogAlgebra::Ns),
                vec!["N=1 Neveu-Schwarz in the L,G conventions of the super W(2,2) table".to_string()],
            )
        }
        other => return Err(Error::UnknownAlgebra(other.to_string())),
    };
    Ok(pres)
}

/// `catalog_build("orw", {lambda, epsilon})` with `epsilon` given doubled.
pub fn orw(lambda: Rational, epsilon_doubled: i64) -> AlgebraPresentation {
    let mut p = BTreeMap::new();
    p.insert("lambda".to_string(), lambda);
    p.insert("epsilon".to_string(), rat(epsilon_doubled, 2));
    catalog_build("orw", &p).expect("valid orw parameters")
}

/// Convenience for parameterless catalog entries.
pub fn named(name: &str) -> AlgebraPresentation {
    catalog_build(name, &BTreeMap::new()).expect("catalog name")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(p: &AlgebraPresentation, f: &str, d: i64) -> GeneratorRef {
        p.generator(f, HalfInt::from_doubled(d)).unwrap()
    }

    #[test]
    fn vir_brackets() {
        let vir = named("vir");
        let r = vir.bracket(g(&vir, "L", 4), g(&vir, "L", 6));
        assert_eq!(vir.format_result(&r), "1 * L[5]");
        let r = vir.bracket(g(&vir, "L", 4), g(&vir, "L", -4));
        assert_eq!(r.coefficient(&g(&vir, "L", 0)), int(-4));
        assert_eq!(r.coefficient(&g(&vir, "C", 0)), rat(1, 2));
        assert_eq!(r.len(), 2);
        assert_eq!(
            vir.families().iter().map(|f| f.name.as_str()).collect::<Vec<_>>(),
            vec!["C", "L"]
        );
    }

    #[test]
    fn orw_lattices_and_brackets() {
        let a = orw(rat(-1, 2), 1);
        let gfam = &a.families()[a.family_id("G").unwrap()];
        assert_eq!(gfam.lattice, Lattice::HalfOdd);
        assert!(a.bracket(g(&a, "L", 2), g(&a, "G", 1)).is_zero());
        let a0 = orw(rat(-1, 2), 0);
        assert_eq!(a0.family(a0.family_id("G").unwrap()).lattice, Lattice::Integral);
        // reverse orientation follows from antisymmetry
        let r = a.bracket(g(&a, "G", 1), g(&a, "L", 4));
        // [G_{1/2}, L_2] = -[L_2, G_{1/2}] = -(1/2 - 1) G_{5/2}
        assert_eq!(r.coefficient(&g(&a, "G", 5)), rat(1, 2));
    }

    #[test]
    fn q_h_acts_by_shift() {
        let q = named("q");
        let r = q.bracket(g(&q, "H", 4), g(&q, "G", 1));
        assert_eq!(q.format_result(&r), "1 * G[5/2]");
    }

    #[test]
    fn errors() {
        assert!(matches!(catalog_build("e8", &BTreeMap::new()), Err(Error::UnknownAlgebra(_))));
        let mut p = BTreeMap::new();
        p.insert("epsilon".to_string(), rat(1, 3));
        assert!(matches!(catalog_build("orw", &p), Err(Error::InvalidParameter(_))));
        let mut p = BTreeMap::new();
        p.insert("lambda".to_string(), rat(1, 3));
        assert!(catalog_build("vir", &p).is_err());
    }

    #[test]
    fn central_brackets_vanish() {
        let b = named("bms3");
        let c1 = g(&b, "C1", 0);
        for x in b.generators_in(super::super::DegreeWindow::degrees(-2, 2)) {
            assert!(b.bracket(c1, x).is_zero());
            assert!(b.bracket(x, c1).is_zero());
        }
    }
}
