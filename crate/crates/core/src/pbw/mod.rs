//! Universal enveloping algebras: words, PBW straightening with Koszul
//! signs, Ω-operator builders and the rewriting identities behind the
//! odd Ω-operators.

mod element;
mod normal;
mod omega;

pub use element::{env_mul, EnvElement, Word};
pub use normal::{element_equal, is_normal, normal_form};
pub use omega::{
    build_omega, odd_contraction, verify_omega2_identity, verify_omega3_combination, w_element,
    IdentityReport, OmegaKind,
};
