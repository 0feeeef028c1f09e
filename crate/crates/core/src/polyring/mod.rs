//! Exact sparse arithmetic in `Q[x_1, ..., x_n, t]`.
//!
//! Every variable has internal weight 1. User-facing reports double this to
//! get cohomological degree.

mod json;
mod monomial;
mod polynomial;
mod rational;
mod symmetric;

pub use json::{PolynomialJson, TermJson};
pub use monomial::{Monomial, Var};
pub use polynomial::{Assignment, Polynomial};
pub use rational::{format_rational, parse_rational, ratio, rational, Rational};
pub use symmetric::{elementary_symmetric, elementary_symmetric_all, power_sum};

pub(crate) use monomial::Exponents;
