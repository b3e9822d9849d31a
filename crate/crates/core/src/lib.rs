//! Exact-arithmetic workbench for the Ovsienko–Roger superalgebras and their
//! relatives: presentations, enveloping-algebra normal forms, closed-form
//! weight modules, Ω-operator scans and exterior-algebra ideal certificates.

pub mod driver;
pub mod error;
pub mod grassmann;
pub mod pbw;
pub mod scalar;
pub mod superalg;
pub mod weightmod;

pub use error::{Error, ParseError, Result};
