use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A variable `x[row, col]` (or `y[a, b]` in the pair shape, with `a` in the row slot).
///
/// Field order matters: the derived `Ord` compares the column first, then the
/// row, which is the variable order underlying [`crate::TermOrder::LexColMajor`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub col: u32,
    pub row: u32,
}

impl Var {
    pub fn new(row: u32, col: u32) -> Self {
        Var { col, row }
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x[{},{}]", self.row, self.col)
    }
}

/// How variables are indexed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `x[i, s]` with `1 <= i <= rows` and `s` a positive column index.
    RowColumn { rows: u32 },
    /// `y[a, b]` with both coordinates positive and unbounded.
    Pair,
}

impl Shape {
    pub fn letter(self) -> char {
        match self {
            Shape::RowColumn { .. } => 'x',
            Shape::Pair => 'y',
        }
    }

    pub fn check(self, m: &Monomial) -> Result<()> {
        for &(v, _) in m.exps() {
            if v.row == 0 || v.col == 0 {
                return Err(Error::ShapeError(format!("non-positive index in {v:?}")));
            }
            if let Shape::RowColumn { rows } = self {
                if v.row > rows {
                    return Err(Error::ShapeError(format!(
                        "row {} exceeds declared row count {rows}",
                        v.row
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A monomial: variables with positive exponents, kept sorted by descending [`Var`].
///
/// With this layout the derived lexicographic `Ord` on the exponent list is the
/// column-major lex order: the first differing position decides, and a proper
/// extension is greater.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    /// Collects `(var, exponent)` pairs, merging repeats and dropping zero exponents.
    pub fn from_exps(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *acc.entry(v).or_default() += e;
        }
        Monomial {
            exps: acc.into_iter().rev().filter(|&(_, e)| e > 0).collect(),
        }
    }

    /// Convenience constructor from `(row, col, exp)` triples.
    pub fn from_triples(triples: &[(u32, u32, u32)]) -> Self {
        Monomial::from_exps(triples.iter().map(|&(r, c, e)| (Var::new(r, c), e)))
    }

    /// Exponents in descending variable order.
    pub fn exps(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|e| e.1).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by(|probe| v.cmp(&probe.0))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            let (a, b) = (self.exps[i], other.exps[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Greater => {
                    out.push(a);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Plain divisibility: `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 > v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => j += 1,
                _ => return false,
            }
        }
        true
    }

    /// `other / self` when `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exps(
            other
                .exps
                .iter()
                .map(|&(v, e)| (v, e - self.exponent(v))),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut acc: BTreeMap<Var, u32> = BTreeMap::new();
        for &(v, e) in self.exps.iter().chain(&other.exps) {
            let slot = acc.entry(v).or_default();
            *slot = (*slot).max(e);
        }
        Monomial {
            exps: acc.into_iter().rev().collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// Distinct column indices, ascending.
    pub fn columns(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.exps.iter().map(|e| e.0.col).collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    }

    /// Distinct row indices, ascending.
    pub fn rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.exps.iter().map(|e| e.0.row).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    pub fn max_col(&self) -> u32 {
        self.exps.first().map_or(0, |e| e.0.col)
    }

    /// Row exponent vectors per column, columns ascending, each column's rows descending.
    pub fn column_contents(&self) -> Vec<(u32, Vec<(u32, u32)>)> {
        let mut out: Vec<(u32, Vec<(u32, u32)>)> = Vec::new();
        for &(v, e) in self.exps.iter().rev() {
            match out.last_mut() {
                Some((c, content)) if *c == v.col => content.push((v.row, e)),
                _ => out.push((v.col, vec![(v.row, e)])),
            }
        }
        for (_, content) in &mut out {
            content.reverse();
        }
        out
    }

    /// Relabels every variable; non-injective maps merge exponents.
    pub fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Monomial {
        Monomial::from_exps(self.exps.iter().map(|&(v, e)| (f(v), e)))
    }

    pub fn map_columns(&self, mut f: impl FnMut(u32) -> u32) -> Monomial {
        self.map_vars(|v| Var::new(v.row, f(v.col)))
    }

    /// Formats with the given variable letter, variables ascending, `*` separated.
    pub fn display_with(&self, letter: char) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        self.exps
            .iter()
            .rev()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("{letter}[{},{}]", v.row, v.col)
                } else {
                    format!("{letter}[{},{}]^{e}", v.row, v.col)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(t: &[(u32, u32, u32)]) -> Monomial {
        Monomial::from_triples(t)
    }

    #[test]
    fn arithmetic() {
        let a = mono(&[(1, 1, 2), (2, 3, 1)]);
        let b = mono(&[(1, 1, 1), (1, 2, 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab, mono(&[(1, 1, 3), (1, 2, 1), (2, 3, 1)]));
        assert!(a.divides(&ab) && b.divides(&ab));
        assert!(!ab.divides(&a));
        assert_eq!(a.quotient_of(&ab).unwrap(), b);
        assert_eq!(a.lcm(&b), mono(&[(1, 1, 2), (1, 2, 1), (2, 3, 1)]));
        assert!(!a.is_coprime(&b));
        assert!(mono(&[(1, 2, 1)]).is_coprime(&mono(&[(2, 2, 1)])));
        assert_eq!(ab.degree(), 5);
        assert_eq!(ab.columns(), vec![1, 2, 3]);
        assert_eq!(ab.max_col(), 3);
    }

    #[test]
    fn shape_check() {
        let m = mono(&[(3, 1, 1)]);
        assert!(Shape::RowColumn { rows: 2 }.check(&m).is_err());
        assert!(Shape::RowColumn { rows: 3 }.check(&m).is_ok());
        assert!(Shape::Pair.check(&m).is_ok());
    }

    #[test]
    fn display() {
        assert_eq!(mono(&[(2, 7, 1), (1, 4, 2)]).to_string(), "x[1,4]^2*x[2,7]");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
