//! Exact scalars: rationals and sparse multivariate polynomials over them.

mod poly;
mod rational;

pub use poly::{Monomial, PolyScalar};
pub use rational::{binomial, format_rational, int, parse_rational, rat, signed_binomial, Rational};
