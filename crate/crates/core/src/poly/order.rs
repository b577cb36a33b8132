use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::monomial::{Monomial, Shape};
use crate::error::{Error, Result};

/// Monomial orders compatible with strictly increasing column maps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    /// Lexicographic on exponents, reading variables from the highest column
    /// downward and, within a column, from the highest row downward.
    #[default]
    LexColMajor,
}

impl TermOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::LexColMajor => a.cmp(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TermOrder::LexColMajor => "lex-colmajor",
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TermOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex-colmajor" | "lex" => Ok(TermOrder::LexColMajor),
            _ => Err(Error::parse(0, format!("unknown term order `{s}`"))),
        }
    }
}

/// [`TermOrder::compare`] after validating both monomials against `shape`.
pub fn compare(order: TermOrder, shape: Shape, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    shape.check(a)?;
    shape.check(b)?;
    Ok(order.compare(a, b))
}
