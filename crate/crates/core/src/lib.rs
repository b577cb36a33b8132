//! Equivariant Groebner bases over polynomial rings in infinitely many variables,
//! together with the relational structures and orbit categories behind them.

pub mod corpus;
pub mod equivariant;
pub mod error;
pub mod field;
pub mod orbitcat;
pub mod perm;
pub mod poly;
pub mod relations;
pub mod skewalg;
pub mod symmetry;

pub use error::{Error, Result};
pub use field::{Field, Fp, Rational};
pub use perm::Perm;
pub use poly::{parse_polynomial, Monomial, Polynomial, Shape, TermOrder, Var};
pub use orbitcat::{OrbitMorphism, OrbitObject};
pub use relations::{FinitePartialInjection, RelationKind};
pub use skewalg::{skew_mul, SkewElement};
pub use symmetry::{SymmetryType, TruncationContext};
