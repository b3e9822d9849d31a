//! Closed-form weight modules given by single-shift action rules, checked
//! symbolically in the generic basis index.

mod act;
mod axioms;
mod omega;
mod spec;
mod twist;
mod window;

pub use act::{symbolic_act, SymbolicVector};
pub use axioms::{axiom_check, pair_residual, AxiomFailure, AxiomReport};
pub use omega::{omega_min_m, symbolic_omega_residual, OmegaScan, OmegaStep, DEFAULT_GRID, FIRST_VAR, SECOND_VAR};
pub use spec::{module_build, ActionRule, ParamValue, Sector, WeightModuleSpec, GEN_VAR, INDEX_VAR, MODULE_NAMES};
pub use twist::{apply_twist, negate_rule, pin_sign_convention, PinReport, Twist};
pub use window::{g_trivial, ScanReport, WindowModule, DEFAULT_MARGIN2};

#[cfg(test)]
mod tests;
