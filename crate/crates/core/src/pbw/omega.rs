use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{format_rational, int, signed_binomial, PolyScalar, Rational};
use crate::superalg::{AlgebraPresentation, HalfInt};

use super::element::{EnvElement, Word};
use super::normal::normal_form;

/// Which pair of families an Ω-operator alternates over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OmegaKind {
    /// `Σ (-1)^i C(m,i) L_{k-i} L_{s+i}`
    LL,
    /// `Σ (-1)^i C(m,i) G_{r-i} L_{s+i}`
    GL,
    /// `Σ (-1)^i C(m,i) G_{r-i} G_{s+i}`
    GG,
}

impl OmegaKind {
    pub const ALL: [OmegaKind; 3] = [OmegaKind::LL, OmegaKind::GL, OmegaKind::GG];

    /// (left family, right family)
    pub fn families(self) -> (&'static str, &'static str) {
        match self {
            OmegaKind::LL => ("L", "L"),
            OmegaKind::GL => ("G", "L"),
            OmegaKind::GG => ("G", "G"),
        }
    }
}

impl fmt::Display for OmegaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            OmegaKind::LL => "LL",
            OmegaKind::GL => "GL",
            OmegaKind::GG => "GG",
        };
        f.write_str(s)
    }
}

impl FromStr for OmegaKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "LL" => Ok(OmegaKind::LL),
            "GL" => Ok(OmegaKind::GL),
            "GG" => Ok(OmegaKind::GG),
            other => Err(Error::InvalidParameter(format!("unknown omega kind `{other}`"))),
        }
    }
}

/// Un-straightened `Σ_{i=0}^{m} (-1)^i C(m,i) X_{first-i} Y_{s+i}`.
pub fn build_omega(
    alg: &AlgebraPresentation,
    kind: OmegaKind,
    first: HalfInt,
    s: HalfInt,
    m: usize,
) -> Result<EnvElement> {
    let (fx, fy) = kind.families();
    let mut e = EnvElement::zero(alg);
    for i in 0..=m {
        let step = HalfInt::int(i as i64);
        let x = alg.generator(fx, first - step)?;
        let y = alg.generator(fy, s + step)?;
        e.add_term(Word(vec![x, y]), PolyScalar::constant(signed_binomial(m, i)));
    }
    Ok(e)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub passed: bool,
    /// Normal form of `lhs - rhs` when nonzero.
    pub residual: Option<String>,
}

fn lambda_of(alg: &AlgebraPresentation) -> Result<Rational> {
    match alg.param("lambda") {
        Some(l) if alg.name() == "orw" => Ok(l.clone()),
        _ => Err(Error::InvalidParameter(format!(
            "`{}` is not an Ovsienko-Roger presentation",
            alg.key()
        ))),
    }
}

/// `Σ_i (-1)^i C(m,i) (t + λ(s+i)) G_{r-i} G_{s+t+i}`: the image of
/// `Ω̄_{r,s}^{(m)}` under `X ↦ G_t X + X G_t`. At `λ = -½` this is
/// `-½ Σ_i (-1)^i C(m,i) (s+i-2t) G_{r-i} G_{s+t+i}`.
pub fn odd_contraction(
    alg: &AlgebraPresentation,
    m: usize,
    r: HalfInt,
    s: HalfInt,
    t: HalfInt,
) -> Result<EnvElement> {
    let lambda = lambda_of(alg)?;
    let mut e = EnvElement::zero(alg);
    for i in 0..=m {
        let step = HalfInt::int(i as i64);
        let coeff = (t.to_rational() + &lambda * (s + step).to_rational()) * signed_binomial(m, i);
        let w = Word(vec![alg.generator("G", r - step)?, alg.generator("G", s + t + step)?]);
        e.add_term(w, PolyScalar::constant(coeff));
    }
    Ok(e)
}

fn report(alg: &AlgebraPresentation, identity: String, lhs: &EnvElement, rhs: &EnvElement) -> Result<IdentityReport> {
    let diff = normal_form(alg, &lhs.sub(rhs)?)?;
    Ok(IdentityReport {
        identity,
        passed: diff.is_zero(),
        residual: (!diff.is_zero()).then(|| diff.format(alg)),
    })
}

/// Checks `G_t Ω̄_{r,s}^{(m)} + Ω̄_{r,s}^{(m)} G_t = Σ_i (-1)^i C(m,i)(t+λ(s+i)) G_{r-i}G_{s+t+i}`
/// in `U(L̂)` by normal forms.
pub fn verify_omega2_identity(
    alg: &AlgebraPresentation,
    m: usize,
    r: HalfInt,
    s: HalfInt,
    t: HalfInt,
) -> Result<IdentityReport> {
    if !s.is_integral() {
        return Err(Error::LatticeMismatch {
            family: "L".into(),
            index: s.to_string(),
        });
    }
    let omega = build_omega(alg, OmegaKind::GL, r, s, m)?;
    let gt = EnvElement::generator(alg, alg.generator("G", t)?);
    let lhs = gt.mul(&omega)?.add(&omega.mul(&gt)?)?;
    let rhs = odd_contraction(alg, m, r, s, t)?;
    report(alg, format!("omega2(m={m}, r={r}, s={s}, t={t})"), &lhs, &rhs)
}

/// Checks that two contractions with `s_i + t_i = u` combine to a multiple
/// of `Ω̲_{r,u}^{(m)}`:
/// `W_{s1,t1} - W_{s2,t2} = (λ-1)(s1-s2) Ω̲_{r,u}^{(m)}`, which at `λ = -½`
/// is `-½ · 3(s1-s2) Ω̲_{r,u}^{(m)}`.
pub fn verify_omega3_combination(
    alg: &AlgebraPresentation,
    m: usize,
    r: HalfInt,
    u: HalfInt,
    s1: HalfInt,
    s2: HalfInt,
) -> Result<IdentityReport> {
    if s1 == s2 {
        return Err(Error::InvalidParameter("s1 and s2 must differ".into()));
    }
    for s in [s1, s2] {
        if !s.is_integral() {
            return Err(Error::LatticeMismatch {
                family: "L".into(),
                index: s.to_string(),
            });
        }
    }
    let lambda = lambda_of(alg)?;
    let factor = (&lambda - int(1)) * (s1 - s2).to_rational();
    if factor.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "(lambda-1)(s1-s2) vanishes at lambda = {}",
            format_rational(&lambda)
        )));
    }
    let (t1, t2) = (u - s1, u - s2);
    let lhs = odd_contraction(alg, m, r, s1, t1)?.sub(&odd_contraction(alg, m, r, s2, t2)?)?;
    let rhs = build_omega(alg, OmegaKind::GG, r, u, m)?.scale(&factor);
    report(
        alg,
        format!("omega3(m={m}, r={r}, u={u}, s1={s1}, s2={s2})"),
        &lhs,
        &rhs,
    )
}

/// The λ-free contraction `W_{s,t} = Σ_i (-1)^i C(m,i)(s+i-2t) G_{r-i}G_{s+t+i}`,
/// independent of λ.
pub fn w_element(alg: &AlgebraPresentation, m: usize, r: HalfInt, s: HalfInt, t: HalfInt) -> Result<EnvElement> {
    let mut e = EnvElement::zero(alg);
    for i in 0..=m {
        let step = HalfInt::int(i as i64);
        let coeff = ((s + step).to_rational() - int(2) * t.to_rational()) * signed_binomial(m, i);
        let w = Word(vec![alg.generator("G", r - step)?, alg.generator("G", s + t + step)?]);
        e.add_term(w, PolyScalar::constant(coeff));
    }
    Ok(e)
}
