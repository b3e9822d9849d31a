use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::scalar::Rational;

use super::presentation::{koszul, AlgebraPresentation, BracketResult, DegreeWindow, GeneratorRef};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AntisymmetryViolation {
    pub x: String,
    pub y: String,
    /// `[x, y]`
    pub xy: String,
    /// `[y, x]`
    pub yx: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AntisymmetryReport {
    pub algebra: String,
    pub window: DegreeWindow,
    pub pairs_checked: usize,
    pub violations: Vec<AntisymmetryViolation>,
}

impl AntisymmetryReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JacobiViolation {
    pub x: String,
    pub y: String,
    pub z: String,
    /// `[x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]]`
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub algebra: String,
    pub window: DegreeWindow,
    pub triples_checked: usize,
    pub violations: Vec<JacobiViolation>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// `[x,y] + (-1)^{|x||y|}[y,x] = 0` for every pair in the window.
pub fn check_antisymmetry(alg: &AlgebraPresentation, window: DegreeWindow) -> AntisymmetryReport {
    let gens = alg.generators_in(window);
    let mut violations = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let xy = alg.bracket(x, y);
            let yx = alg.bracket(y, x);
            let mut sum = xy.clone();
            sum.add_scaled(&koszul(alg.parity(x), alg.parity(y)), &yx);
            if !sum.is_zero() {
                violations.push(AntisymmetryViolation {
                    x: alg.format_generator(x),
                    y: alg.format_generator(y),
                    xy: alg.format_result(&xy),
                    yx: alg.format_result(&yx),
                });
            }
        }
    }
    AntisymmetryReport {
        algebra: alg.key(),
        window,
        pairs_checked: gens.len() * gens.len(),
        violations,
    }
}

/// Residual of the graded Jacobi identity on one ordered triple.
pub fn jacobi_residual(
    alg: &AlgebraPresentation,
    x: GeneratorRef,
    y: GeneratorRef,
    z: GeneratorRef,
) -> BracketResult {
    let mut res = alg.bracket_left(x, &alg.bracket(y, z));
    res.add_scaled(&-Rational::one(), &alg.bracket_right(&alg.bracket(x, y), z));
    let sign = -koszul(alg.parity(x), alg.parity(y));
    res.add_scaled(&sign, &alg.bracket_left(y, &alg.bracket(x, z)));
    res
}

/// `[x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]` for every ordered triple
/// in the window. Violations are listed in triple order.
pub fn check_super_jacobi(alg: &AlgebraPresentation, window: DegreeWindow) -> JacobiReport {
    let gens = alg.generators_in(window);
    let violations: Vec<JacobiViolation> = gens
        .par_iter()
        .map(|&x| {
            let mut local = Vec::new();
            for &y in &gens {
                for &z in &gens {
                    let r = jacobi_residual(alg, x, y, z);
                    if !r.is_zero() {
                        local.push(JacobiViolation {
                            x: alg.format_generator(x),
                            y: alg.format_generator(y),
                            z: alg.format_generator(z),
                            residual: alg.format_result(&r),
                        });
                    }
                }
            }
            local
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    JacobiReport {
        algebra: alg.key(),
        window,
        triples_checked: gens.len().pow(3),
        violations,
    }
}

/// Pairs whose bracket has a term off the degree `deg x + deg y`.
pub fn check_degree_additivity(alg: &AlgebraPresentation, window: DegreeWindow) -> Vec<(String, String)> {
    let gens = alg.generators_in(window);
    let mut bad = Vec::new();
    for &x in &gens {
        for &y in &gens {
            let want = alg.degree(x) + alg.degree(y);
            if alg.bracket(x, y).terms().any(|(t, _)| alg.degree(*t) != want) {
                bad.push((alg.format_generator(x), alg.format_generator(y)));
            }
        }
    }
    bad
}
