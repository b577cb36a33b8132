use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, Shape};

/// Which monoid or group acts on variable indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum SymmetryType {
    /// Strictly increasing maps of the positive integers acting on columns of `x[i, s]`.
    #[serde(rename = "inc")]
    IncColumns { rows: u32 },
    /// All permutations of the positive integers acting on columns of `x[i, s]`.
    #[serde(rename = "sym")]
    SymColumns { rows: u32 },
    /// Independent permutations of both coordinates of `y[a, b]`.
    #[serde(rename = "pairsym")]
    PairSym,
}

impl SymmetryType {
    pub fn shape(self) -> Shape {
        match self {
            SymmetryType::IncColumns { rows } | SymmetryType::SymColumns { rows } => {
                Shape::RowColumn { rows }
            }
            SymmetryType::PairSym => Shape::Pair,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SymmetryType::IncColumns { .. } => "inc",
            SymmetryType::SymColumns { .. } => "sym",
            SymmetryType::PairSym => "pairsym",
        }
    }

    pub fn rows(self) -> Option<u32> {
        match self {
            SymmetryType::IncColumns { rows } | SymmetryType::SymColumns { rows } => Some(rows),
            SymmetryType::PairSym => None,
        }
    }

    /// Builds a symmetry from its file/CLI name and row count.
    pub fn from_name(name: &str, rows: Option<u32>) -> Result<Self> {
        let need_rows = || match rows {
            Some(r) if r >= 1 => Ok(r),
            Some(_) => Err(Error::ShapeError("row count must be at least 1".into())),
            None => Err(Error::parse(0, format!("symmetry `{name}` needs a row count"))),
        };
        match name.trim() {
            "inc" => Ok(SymmetryType::IncColumns { rows: need_rows()? }),
            "sym" => Ok(SymmetryType::SymColumns { rows: need_rows()? }),
            "pairsym" => Ok(SymmetryType::PairSym),
            other => Err(Error::parse(0, format!("unknown symmetry `{other}`"))),
        }
    }

    pub fn check_monomial(self, m: &Monomial) -> Result<()> {
        self.shape().check(m)
    }

    pub fn check_poly<F: Field>(self, p: &Polynomial<F>) -> Result<()> {
        p.monomials().try_for_each(|m| self.check_monomial(m))
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rows() {
            Some(r) => write!(f, "{}(rows={r})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Column horizon `m`: every index handled lies in `[1..m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TruncationContext {
    pub m: u32,
}

impl TruncationContext {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ShapeError("truncation horizon must be positive".into()));
        }
        Ok(TruncationContext { m })
    }

    pub fn contains<F: Field>(&self, p: &Polynomial<F>) -> bool {
        p.max_col() <= self.m
    }
}
