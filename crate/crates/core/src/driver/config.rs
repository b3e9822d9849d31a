use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::parse_rational;
use crate::superalg::{
    catalog_build, AlgebraPresentation, BracketResult, DegreeWindow, Family, GeneratorRef, HalfInt, Lattice,
    Parity, TableEntry,
};
use crate::weightmod::{module_build, ParamValue, WeightModuleSpec};

/// `{ algebra = "orw", lambda = "-1/2", epsilon = "1/2" }`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSel {
    pub algebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<String>,
}

impl AlgebraSel {
    pub fn named(name: &str) -> Self {
        Self {
            algebra: name.into(),
            lambda: None,
            epsilon: None,
        }
    }

    pub fn orw(lambda: &str, epsilon: &str) -> Self {
        Self {
            algebra: "orw".into(),
            lambda: Some(lambda.into()),
            epsilon: Some(epsilon.into()),
        }
    }

    pub fn resolve(&self) -> Result<AlgebraPresentation> {
        let mut params = BTreeMap::new();
        for (k, v) in [("lambda", &self.lambda), ("epsilon", &self.epsilon)] {
            if let Some(v) = v {
                params.insert(k.to_string(), parse_rational(v)?);
            }
        }
        catalog_build(&self.algebra, &params)
    }
}

/// `{ module = "Aab", a = "1/2", b = "sym" }`, optionally with
/// `over = { algebra = ... }`; the default algebra depends on the module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSel {
    pub module: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub over: Option<AlgebraSel>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl ModuleSel {
    pub fn new(module: &str, over: AlgebraSel) -> Self {
        Self {
            module: module.into(),
            over: Some(over),
            a: None,
            b: None,
            c: None,
            lambda: None,
        }
    }

    pub fn with(mut self, key: &str, value: &str) -> Self {
        let v = Some(value.to_string());
        match key {
            "a" => self.a = v,
            "b" => self.b = v,
            "c" => self.c = v,
            "lambda" => self.lambda = v,
            _ => {}
        }
        self
    }

    pub fn default_algebra(module: &str) -> AlgebraSel {
        match module {
            "Flambda" => AlgebraSel::named("witt"),
            "Aabc" => AlgebraSel::named("q"),
            "Sab" | "PiSab" => AlgebraSel::named("ns"),
            "Aab_trivial_ext" | "HalfS" => AlgebraSel::orw("-1/2", "1/2"),
            _ => AlgebraSel::named("vir"),
        }
    }

    pub fn algebra(&self) -> AlgebraSel {
        self.over.clone().unwrap_or_else(|| Self::default_algebra(&self.module))
    }

    pub fn params(&self) -> Result<BTreeMap<String, ParamValue>> {
        let mut out = BTreeMap::new();
        for (k, v) in [("a", &self.a), ("b", &self.b), ("c", &self.c), ("lambda", &self.lambda)] {
            if let Some(v) = v {
                out.insert(k.to_string(), ParamValue::parse(v)?);
            }
        }
        Ok(out)
    }

    pub fn resolve(&self) -> Result<WeightModuleSpec> {
        let alg = Arc::new(self.algebra().resolve()?);
        module_build(&self.module, alg, &self.params()?)
    }

    pub fn label(&self) -> String {
        let mut s = self.module.clone();
        for (k, v) in [("a", &self.a), ("b", &self.b), ("c", &self.c), ("lambda", &self.lambda)] {
            if let Some(v) = v {
                s.push_str(&format!(" {k}={v}"));
            }
        }
        let alg = self.algebra();
        s.push_str(&format!(" over {}", alg.algebra));
        if let Some(l) = &alg.lambda {
            s.push_str(&format!("(lambda={l}"));
            s.push_str(&format!(",epsilon={})", alg.epsilon.as_deref().unwrap_or("1/2")));
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDecl {
    pub name: String,
    /// `even`, `odd` or `central`
    pub parity: String,
    /// `Z`, `Z+1/2`; ignored for central families
    #[serde(default)]
    pub lattice: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDecl {
    pub x: String,
    pub y: String,
    /// `[[coefficient, generator], ...]`
    pub result: Vec<[String; 2]>,
}

/// A structure-constant table given in a config file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomTable {
    pub name: String,
    pub families: Vec<FamilyDecl>,
    pub window: [i64; 2],
    pub entries: Vec<EntryDecl>,
}

impl CustomTable {
    fn families(&self) -> Result<Vec<Family>> {
        let mut out = Vec::new();
        for f in &self.families {
            if f.name.is_empty() || !f.name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_') {
                return Err(Error::Config(format!("bad family name `{}`", f.name)));
            }
            if out.iter().any(|g: &Family| g.name == f.name) {
                return Err(Error::Config(format!("family `{}` declared twice", f.name)));
            }
            let lattice = || match f.lattice.as_deref().unwrap_or("Z") {
                "Z" => Ok(Lattice::Integral),
                "Z+1/2" => Ok(Lattice::HalfOdd),
                other => Err(Error::Config(format!("unknown lattice `{other}`"))),
            };
            out.push(match f.parity.as_str() {
                "even" => Family::new(&f.name, Parity::Even, lattice()?),
                "odd" => Family::new(&f.name, Parity::Odd, lattice()?),
                "central" => Family::central(&f.name),
                other => return Err(Error::Config(format!("unknown parity `{other}`"))),
            });
        }
        Ok(out)
    }

    fn generator(families: &[Family], text: &str) -> Result<GeneratorRef> {
        let t = text.trim();
        let (name, rest) = t
            .split_once('[')
            .ok_or_else(|| Error::Config(format!("expected `Family[index]`, got `{text}`")))?;
        let idx = rest
            .strip_suffix(']')
            .ok_or_else(|| Error::Config(format!("expected `]` in `{text}`")))?;
        let id = families
            .iter()
            .position(|f| f.name == name)
            .ok_or_else(|| Error::Config(format!("unknown family `{name}`")))?;
        Ok(GeneratorRef::new(id, HalfInt::parse(idx)?))
    }

    pub fn resolve(&self) -> Result<AlgebraPresentation> {
        let families = self.families()?;
        let window = window_of(self.window, "custom table window")?;
        let mut entries = Vec::new();
        for e in &self.entries {
            let mut result = BracketResult::zero();
            for [c, g] in &e.result {
                result.add(parse_rational(c)?, Self::generator(&families, g)?);
            }
            entries.push(TableEntry {
                x: Self::generator(&families, &e.x)?,
                y: Self::generator(&families, &e.y)?,
                result,
            });
        }
        AlgebraPresentation::from_table(&self.name, families, window, entries)
    }
}

/// Bound on doubled window endpoints accepted from config files.
pub const MAX_WINDOW2: i64 = 200;

pub(crate) fn window_of(w: [i64; 2], what: &str) -> Result<DegreeWindow> {
    let dw = DegreeWindow::doubled(w[0], w[1]);
    if dw.is_empty() {
        return Err(Error::Config(format!("{what} [{}, {}] is empty", w[0], w[1])));
    }
    if w[0].abs() > MAX_WINDOW2 || w[1].abs() > MAX_WINDOW2 {
        return Err(Error::Config(format!("{what} exceeds ±{MAX_WINDOW2} (doubled)")));
    }
    Ok(dw)
}

/// Selections, windows and bounds for the suites; every field is optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebras: Option<Vec<AlgebraSel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub custom: Option<CustomTable>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modules: Option<Vec<ModuleSel>>,
    /// Doubled degree window for algebra and module checks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub window: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_m: Option<usize>,
    /// Doubled grid for the free Ω indices.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<[i64; 2]>,
    /// Doubled index window for submodule scans.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan_window: Option<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambdas: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

/// Bound on `max_m` accepted from config files.
pub const MAX_M: usize = 12;

pub const DEFAULT_LAMBDAS: [&str; 4] = ["-1/2", "0", "1", "-1"];

impl SuiteConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// JSON when the text starts with `{`, TOML otherwise.
    pub fn from_str_auto(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json_str(text)
        } else {
            Self::from_toml_str(text)
        }
    }

    pub fn window(&self) -> DegreeWindow {
        let w = self.window.unwrap_or([-8, 8]);
        DegreeWindow::doubled(w[0], w[1])
    }

    pub fn grid(&self) -> DegreeWindow {
        let w = self.grid.unwrap_or([-8, 8]);
        DegreeWindow::doubled(w[0], w[1])
    }

    pub fn scan_window(&self) -> DegreeWindow {
        let w = self.scan_window.unwrap_or([-20, 20]);
        DegreeWindow::doubled(w[0], w[1])
    }

    pub fn max_m(&self) -> usize {
        self.max_m.unwrap_or(6)
    }

    pub fn lambdas(&self) -> Vec<String> {
        self.lambdas
            .clone()
            .unwrap_or_else(|| DEFAULT_LAMBDAS.iter().map(|s| s.to_string()).collect())
    }

    /// Every orw parameter pair of the λ-sweep.
    pub fn orw_sweep(&self) -> Vec<AlgebraSel> {
        let mut out = Vec::new();
        for l in self.lambdas() {
            for e in ["0", "1/2"] {
                out.push(AlgebraSel::orw(&l, e));
            }
        }
        out
    }

    pub fn algebras(&self) -> Vec<AlgebraSel> {
        self.algebras.clone().unwrap_or_else(|| {
            let mut v = vec![AlgebraSel::named("vir"), AlgebraSel::named("witt")];
            v.extend(self.orw_sweep());
            v.extend(["q", "bms3", "sw22", "ns"].map(AlgebraSel::named));
            v
        })
    }

    pub fn modules(&self) -> Vec<ModuleSel> {
        self.modules.clone().unwrap_or_else(|| {
            let mut v = vec![
                ModuleSel::new("Aab", AlgebraSel::named("vir")),
                ModuleSel::new("Flambda", AlgebraSel::named("witt")),
            ];
            v.extend(self.orw_sweep().into_iter().map(|a| ModuleSel::new("Aab_trivial_ext", a)));
            v.push(ModuleSel::new("Aab_trivial_ext", AlgebraSel::named("bms3")));
            v.push(ModuleSel::new("Aabc", AlgebraSel::named("q")));
            for m in ["Sab", "PiSab"] {
                for a in ["ns", "sw22"] {
                    v.push(ModuleSel::new(m, AlgebraSel::named(a)));
                }
            }
            v.push(ModuleSel::new("HalfS", AlgebraSel::orw("-1/2", "1/2")));
            v
        })
    }

    /// Checks everything that can be checked before running: rationals
    /// parse, windows are nonempty, selections resolve.
    pub fn validate(&self) -> Result<()> {
        let wrap = |what: &str, e: Error| match e {
            Error::Config(_) => e,
            other => Error::Config(format!("{what}: {other}")),
        };
        for (w, what) in [
            (self.window, "window"),
            (self.grid, "grid"),
            (self.scan_window, "scan_window"),
        ] {
            if let Some(w) = w {
                window_of(w, what)?;
            }
        }
        if self.max_m() > MAX_M {
            return Err(Error::Config(format!("max_m {} exceeds {MAX_M}", self.max_m())));
        }
        if self.max_m() > MAX_M {
            return Err(Error::Config(format!("max_m {} exceeds {MAX_M}", self.max_m())));
        }
        for l in self.lambdas() {
            parse_rational(&l).map_err(|e| wrap("lambdas", e.into()))?;
        }
        for a in self.algebras() {
            a.resolve().map_err(|e| wrap(&format!("algebra {}", a.algebra), e))?;
        }
        if let Some(c) = &self.custom {
            c.resolve().map_err(|e| wrap("custom table", e))?;
        }
        for m in self.modules() {
            m.resolve().map_err(|e| wrap(&m.label(), e))?;
        }
        Ok(())
    }
}
