use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::PolyScalar;
use crate::superalg::{DegreeWindow, HalfInt};

use super::spec::{ActionRule, WeightModuleSpec, GEN_VAR, INDEX_VAR};

/// Default erosion margin, doubled.
pub const DEFAULT_MARGIN2: i64 = 4;

/// A fully specialized module truncated to an index window (doubled, the
/// same range for every sector).
#[derive(Clone, Debug)]
pub struct WindowModule {
    spec: WeightModuleSpec,
    window: DegreeWindow,
    margin2: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub module: String,
    pub window: String,
    pub inner: String,
    pub margin: String,
    pub basis_size: usize,
    /// Each witness lists the basis vectors spanning a proper nonzero
    /// subspace of the inner window closed under the tested generators.
    pub witnesses: Vec<Vec<String>>,
    pub verdict: String,
}

type Basis = (usize, HalfInt);

impl WindowModule {
    pub fn new(spec: WeightModuleSpec, window: DegreeWindow, margin2: i64) -> Result<Self> {
        if !spec.is_fully_specialized() {
            return Err(Error::Window(format!("{} has symbolic parameters", spec.describe())));
        }
        if margin2 <= 0 {
            return Err(Error::Window("margin must be positive".into()));
        }
        if window.hi2 - window.lo2 < 2 * margin2 {
            return Err(Error::Window(format!(
                "window {window} is smaller than twice the margin {}",
                HalfInt::from_doubled(margin2)
            )));
        }
        Ok(Self { spec, window, margin2 })
    }

    pub fn spec(&self) -> &WeightModuleSpec {
        &self.spec
    }

    pub fn window(&self) -> DegreeWindow {
        self.window
    }

    pub fn inner(&self) -> DegreeWindow {
        DegreeWindow::doubled(self.window.lo2 + self.margin2, self.window.hi2 - self.margin2)
    }

    fn basis_in(&self, w: DegreeWindow) -> Vec<Basis> {
        let mut out = Vec::new();
        for (s, sec) in self.spec.sectors().iter().enumerate() {
            for d in w.doubled_values() {
                let i = HalfInt::from_doubled(d);
                if sec.lattice.contains(i) {
                    out.push((s, i));
                }
            }
        }
        out
    }

    pub fn basis(&self) -> Vec<Basis> {
        self.basis_in(self.window)
    }

    fn label(&self, b: Basis) -> String {
        format!("{}[{}]", self.spec.sectors()[b.0].name, b.1)
    }

    /// Nonzero images of each basis vector under generators of degree at
    /// most the margin, staying inside the window.
    fn edges(&self) -> BTreeMap<Basis, Vec<Basis>> {
        let alg = self.spec.algebra();
        let gens: Vec<_> = alg
            .generators_in(DegreeWindow::doubled(-self.margin2, self.margin2))
            .into_iter()
            .filter(|g| !alg.is_central(*g))
            .collect();
        let mut out = BTreeMap::new();
        for b in self.basis() {
            let mut targets = Vec::new();
            for g in &gens {
                let ActionRule::Shift { coeff, target } = self.spec.rule(g.family, b.0) else { continue };
                let dest = b.1 + alg.degree(*g);
                if !self.window.contains(dest) {
                    continue;
                }
                let c = coeff
                    .subst(GEN_VAR, &PolyScalar::constant(g.index.to_rational()))
                    .subst(INDEX_VAR, &PolyScalar::constant(b.1.to_rational()));
                let nonzero = match c.as_constant() {
                    Some(q) => !q.is_zero(),
                    None => true,
                };
                if nonzero {
                    targets.push((*target, dest));
                }
            }
            out.insert(b, targets);
        }
        out
    }

    /// Reachability closures of inner-window vectors; any closure that meets
    /// the inner window in a proper nonzero subset is a non-simplicity
    /// witness. Absence of witnesses proves nothing about simplicity.
    pub fn submodule_scan(&self) -> ScanReport {
        let edges = self.edges();
        let inner = self.inner();
        let inner_basis: BTreeSet<Basis> = self.basis_in(inner).into_iter().collect();
        let mut witnesses: BTreeSet<Vec<Basis>> = BTreeSet::new();
        for &start in &inner_basis {
            let mut seen = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &t in edges.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                    if seen.insert(t) {
                        queue.push_back(t);
                    }
                }
            }
            let hit: Vec<Basis> = seen.intersection(&inner_basis).copied().collect();
            if hit.len() < inner_basis.len() {
                witnesses.insert(hit);
            }
        }
        let witnesses: Vec<Vec<String>> = witnesses
            .into_iter()
            .map(|w| w.into_iter().map(|b| self.label(b)).collect())
            .collect();
        let verdict = if witnesses.is_empty() {
            "no witness found (window-limited)".to_string()
        } else {
            format!("{} witness(es) found", witnesses.len())
        };
        ScanReport {
            module: self.spec.describe(),
            window: self.window.to_string(),
            inner: inner.to_string(),
            margin: HalfInt::from_doubled(self.margin2).to_string(),
            basis_size: self.basis().len(),
            witnesses,
            verdict,
        }
    }
}

/// Whether every odd family acts by the zero rule on every sector.
pub fn g_trivial(spec: &WeightModuleSpec) -> Result<bool> {
    let alg = spec.algebra();
    if !alg.has_odd_families() {
        return Err(Error::InvalidParameter(format!("{} has no odd families", alg.key())));
    }
    Ok(alg.families().iter().enumerate().all(|(f, fam)| {
        !fam.parity.is_odd() || (0..spec.sectors().len()).all(|s| spec.rule(f, s).is_zero())
    }))
}
