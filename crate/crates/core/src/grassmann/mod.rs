//! Exterior algebra on the odd generators and exact ideal-membership
//! certificates for products of `Ω̲` relations.

mod ext;
mod ideal;
mod lemma;

pub use ext::{ext_inject, ExtElement, ExtMonomial, OddWindow};
pub use ideal::{
    expand_certificate, ideal_build, member, monomials, CertTerm, Certificate, IdealBasis, Membership, Relation,
};
pub use lemma::{first_non_member, orbit, verify_lemma33, verify_lemma33_with_margin, Lemma33Report, NonMember};
