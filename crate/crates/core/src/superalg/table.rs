use std::collections::BTreeMap;

use super::presentation::{
    AlgebraPresentation, BracketResult, BracketRule, DegreeWindow, Family, GeneratorRef,
};
use crate::error::{Error, Result};

/// One explicit structure constant row `[x, y] = result`.
#[derive(Clone, Debug)]
pub struct TableEntry {
    pub x: GeneratorRef,
    pub y: GeneratorRef,
    pub result: BracketResult,
}

impl AlgebraPresentation {
    /// A non-catalog algebra given as a finite structure-constant table over a
    /// declared window. Pairs absent from the table bracket to zero; nothing
    /// is filled in by antisymmetry.
    ///
    /// Generator refs in `entries` index into `families` as given (declaration
    /// order); they are remapped to PBW ranks here.
    pub fn from_table(
        name: &str,
        families: Vec<Family>,
        window: DegreeWindow,
        entries: Vec<TableEntry>,
    ) -> Result<Self> {
        if window.is_empty() {
            return Err(Error::Window(format!("empty window {window}")));
        }
        let mut ranked: Vec<usize> = (0..families.len()).collect();
        ranked.sort_by_key(|&i| !families[i].is_central());
        let mut rank_of = vec![0; families.len()];
        for (rank, &orig) in ranked.iter().enumerate() {
            rank_of[orig] = rank;
        }
        let remap = |g: GeneratorRef| -> Result<GeneratorRef> {
            let fam = families
                .get(g.family)
                .ok_or_else(|| Error::UnknownGenerator(format!("#{}", g.family), name.to_string()))?;
            if !fam.lattice.contains(g.index) {
                return Err(Error::LatticeMismatch {
                    family: fam.name.clone(),
                    index: g.index.to_string(),
                });
            }
            Ok(GeneratorRef::new(rank_of[g.family], g.index))
        };
        let mut table = BTreeMap::new();
        for e in entries {
            let x = remap(e.x)?;
            let y = remap(e.y)?;
            for g in [e.x, e.y] {
                if !families[g.family].is_central() && !window.contains(g.index) {
                    return Err(Error::Window(format!(
                        "{}[{}] lies outside the declared window {window}",
                        families[g.family].name, g.index
                    )));
                }
            }
            let mut result = BracketResult::zero();
            for (t, c) in e.result.terms() {
                let t_orig = *t;
                let t = remap(t_orig)?;
                let deg = if families[t_orig.family].is_central() {
                    super::HalfInt::ZERO
                } else {
                    t.index
                };
                let dx = if families[e.x.family].is_central() { super::HalfInt::ZERO } else { x.index };
                let dy = if families[e.y.family].is_central() { super::HalfInt::ZERO } else { y.index };
                if deg != dx + dy {
                    return Err(Error::InvalidParameter(format!(
                        "bracket of {}[{}] and {}[{}] is not degree-additive",
                        families[e.x.family].name, x.index, families[e.y.family].name, y.index
                    )));
                }
                result.add(c.clone(), t);
            }
            table.insert((x, y), result);
        }
        Ok(AlgebraPresentation::new(
            name,
            families,
            BTreeMap::new(),
            BracketRule::Table(table),
            vec![format!("custom table over window {window}")],
        ))
    }
}
