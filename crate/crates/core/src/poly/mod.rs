//! Exact polynomial arithmetic on row-column (or pair-indexed) variables.

pub mod classical;
mod monomial;
pub mod orbit;
mod order;
pub mod parse;
mod polynomial;

pub use classical::{buchberger_classical, member_classical, reduce_classical, s_polynomial};
pub use monomial::{Monomial, Shape, Var};
pub use orbit::{canonicalize, orbit_expand};
pub use order::{compare, TermOrder};
pub use parse::{parse_polynomial, parse_polynomial_with_letter};
pub use polynomial::Polynomial;
