//! Divisibility of monomials up to the column actions.

use crate::error::{Error, Result};
use crate::poly::orbit::DEFAULT_PAIR_CAP;
use crate::poly::{Monomial, Var};
use crate::relations::FinitePartialInjection;
use crate::symmetry::SymmetryType;

/// Index maps under which `m` divides `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Column map on the support of the divisor.
    pub columns: FinitePartialInjection,
    /// Row map, present for the pair action only.
    pub rows: Option<FinitePartialInjection>,
}

impl Witness {
    /// Applies the witness to a monomial whose indices it covers.
    pub fn apply(&self, m: &Monomial) -> Monomial {
        m.map_vars(|v| {
            let col = self.columns.apply(v.col).expect("column outside witness");
            let row = match &self.rows {
                Some(r) => r.apply(v.row).expect("row outside witness"),
                None => v.row,
            };
            Var::new(row, col)
        })
    }
}

/// `Some(witness)` when some admissible index map sends `m` to a divisor of `n`.
///
/// Inc looks for an increasing map of the positive integers (so `c_1 >= s_1`
/// and gaps never shrink) and returns the least one; Sym matches columns by
/// bipartite matching and returns the lexicographically least injection; PairSym
/// searches row and column injections exhaustively.
pub fn eq_divides(m: &Monomial, n: &Monomial, symmetry: SymmetryType) -> Result<Option<Witness>> {
    symmetry.check_monomial(m)?;
    symmetry.check_monomial(n)?;
    Ok(match symmetry {
        SymmetryType::IncColumns { .. } => inc_witness(m, n).map(|cols| Witness {
            columns: column_map(m, &cols),
            rows: None,
        }),
        SymmetryType::SymColumns { .. } => sym_witness(m, n).map(|cols| Witness {
            columns: column_map(m, &cols),
            rows: None,
        }),
        SymmetryType::PairSym => pair_witness(m, n)?,
    })
}

fn column_map(m: &Monomial, targets: &[u32]) -> FinitePartialInjection {
    FinitePartialInjection::new(m.columns().into_iter().zip(targets.iter().copied()).collect())
        .expect("witness is injective")
}

/// Whether a column content (rows descending) is dominated by another.
fn dominated(small: &[(u32, u32)], big: &[(u32, u32)]) -> bool {
    small.iter().all(|&(r, e)| {
        big.iter()
            .find(|&&(br, _)| br == r)
            .is_some_and(|&(_, be)| be >= e)
    })
}

/// Least increasing placement of `m`'s columns under which `m` divides `n`.
pub(crate) fn inc_witness(m: &Monomial, n: &Monomial) -> Option<Vec<u32>> {
    inc_witness_contents(&m.column_contents(), &n.column_contents())
}

/// [`inc_witness`] on precomputed column contents.
pub(crate) fn inc_witness_contents(
    mc: &[(u32, Vec<(u32, u32)>)],
    nc: &[(u32, Vec<(u32, u32)>)],
) -> Option<Vec<u32>> {
    let mut out: Vec<u32> = Vec::with_capacity(mc.len());
    let mut j = 0;
    for (i, (s, content)) in mc.iter().enumerate() {
        let lo = match i {
            0 => *s,
            _ => out[i - 1] + (s - mc[i - 1].0),
        };
        while j < nc.len() && (nc[j].0 < lo || !dominated(content, &nc[j].1)) {
            j += 1;
        }
        let (c, _) = nc.get(j)?;
        out.push(*c);
        j += 1;
    }
    Some(out)
}

/// Every increasing placement of `m`'s columns under which `m` divides `n`.
pub(crate) fn inc_embeddings(m: &Monomial, n: &Monomial) -> Vec<Vec<u32>> {
    fn rec(
        mc: &[(u32, Vec<(u32, u32)>)],
        nc: &[(u32, Vec<(u32, u32)>)],
        from: usize,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        let i = cur.len();
        if i == mc.len() {
            out.push(cur.clone());
            return;
        }
        let lo = match i {
            0 => mc[0].0,
            _ => cur[i - 1] + (mc[i].0 - mc[i - 1].0),
        };
        for j in from..nc.len() {
            if nc[j].0 >= lo && dominated(&mc[i].1, &nc[j].1) {
                cur.push(nc[j].0);
                rec(mc, nc, j + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&m.column_contents(), &n.column_contents(), 0, &mut Vec::new(), &mut out);
    out
}

/// Lexicographically least injective placement of `m`'s columns with domination.
pub(crate) fn sym_witness(m: &Monomial, n: &Monomial) -> Option<Vec<u32>> {
    let mc = m.column_contents();
    let nc = n.column_contents();
    let adj: Vec<Vec<usize>> = mc
        .iter()
        .map(|(_, a)| {
            (0..nc.len())
                .filter(|&j| dominated(a, &nc[j].1))
                .collect()
        })
        .collect();
    let mut fixed: Vec<Option<usize>> = vec![None; mc.len()];
    if !perfect_matching_exists(&adj, &fixed) {
        return None;
    }
    for i in 0..mc.len() {
        for &j in &adj[i] {
            if fixed.contains(&Some(j)) {
                continue;
            }
            fixed[i] = Some(j);
            if perfect_matching_exists(&adj, &fixed) {
                break;
            }
            fixed[i] = None;
        }
        debug_assert!(fixed[i].is_some());
    }
    Some(fixed.iter().map(|j| nc[j.unwrap()].0).collect())
}

/// Kuhn's augmenting paths, with some left vertices pinned.
fn perfect_matching_exists(adj: &[Vec<usize>], fixed: &[Option<usize>]) -> bool {
    let right = adj.iter().flatten().copied().max().map_or(0, |r| r + 1);
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for (i, f) in fixed.iter().enumerate() {
        if let Some(j) = f {
            owner[*j] = Some(i);
        }
    }
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        fixed: &[Option<usize>],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            match owner[v] {
                None => {
                    owner[v] = Some(u);
                    return true;
                }
                Some(w) if fixed[w].is_none() => {
                    if augment(w, adj, fixed, owner, seen) {
                        owner[v] = Some(u);
                        return true;
                    }
                }
                Some(_) => {}
            }
        }
        false
    }
    (0..adj.len()).filter(|&i| fixed[i].is_none()).all(|u| {
        let mut seen = vec![false; right];
        augment(u, adj, fixed, &mut owner, &mut seen)
    })
}

fn pair_witness(m: &Monomial, n: &Monomial) -> Result<Option<Witness>> {
    let (m_rows, m_cols) = (m.rows(), m.columns());
    if m_rows.len() > DEFAULT_PAIR_CAP || m_cols.len() > DEFAULT_PAIR_CAP {
        return Err(Error::BudgetExceeded(format!(
            "pair divisibility over {} rows x {} columns exceeds cap {DEFAULT_PAIR_CAP}",
            m_rows.len(),
            m_cols.len()
        )));
    }
    let search = PairSearch {
        vars: m.exps().iter().rev().copied().collect(),
        n,
        n_rows: n.rows(),
        n_cols: n.columns(),
    };
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    if !search.run(0, &mut rows, &mut cols) {
        return Ok(None);
    }
    let inj = |pairs: Vec<(u32, u32)>| FinitePartialInjection::new(pairs).expect("injective");
    Ok(Some(Witness {
        columns: inj(cols),
        rows: Some(inj(rows)),
    }))
}

struct PairSearch<'a> {
    vars: Vec<(Var, u32)>,
    n: &'a Monomial,
    n_rows: Vec<u32>,
    n_cols: Vec<u32>,
}

impl PairSearch<'_> {
    /// Depth-first over the divisor's variables (ascending), candidates ascending.
    fn run(&self, k: usize, rows: &mut Vec<(u32, u32)>, cols: &mut Vec<(u32, u32)>) -> bool {
        let Some(&(v, e)) = self.vars.get(k) else {
            return true;
        };
        let lookup = |map: &[(u32, u32)], s: u32| map.iter().find(|p| p.0 == s).map(|p| p.1);
        let row_choices: Vec<u32> = match lookup(rows, v.row) {
            Some(r) => vec![r],
            None => self
                .n_rows
                .iter()
                .copied()
                .filter(|r| !rows.iter().any(|p| p.1 == *r))
                .collect(),
        };
        let col_choices: Vec<u32> = match lookup(cols, v.col) {
            Some(c) => vec![c],
            None => self
                .n_cols
                .iter()
                .copied()
                .filter(|c| !cols.iter().any(|p| p.1 == *c))
                .collect(),
        };
        let new_row = lookup(rows, v.row).is_none();
        let new_col = lookup(cols, v.col).is_none();
        for &r in &row_choices {
            for &c in &col_choices {
                if self.n.exponent(Var::new(r, c)) < e {
                    continue;
                }
                if new_row {
                    rows.push((v.row, r));
                }
                if new_col {
                    cols.push((v.col, c));
                }
                if self.run(k + 1, rows, cols) {
                    return true;
                }
                if new_row {
                    rows.pop();
                }
                if new_col {
                    cols.pop();
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse_polynomial;

    fn mono(s: &str) -> Monomial {
        parse_polynomial::<Rational>(s).unwrap().lm().unwrap().clone()
    }

    fn inj(p: &[(u32, u32)]) -> FinitePartialInjection {
        FinitePartialInjection::new(p.to_vec()).unwrap()
    }

    const INC1: SymmetryType = SymmetryType::IncColumns { rows: 1 };
    const INC2: SymmetryType = SymmetryType::IncColumns { rows: 2 };
    const SYM2: SymmetryType = SymmetryType::SymColumns { rows: 2 };

    #[test]
    fn inc_examples() {
        let w = eq_divides(&mono("x[1,1]*x[1,2]"), &mono("x[1,2]*x[1,5]^2"), INC1)
            .unwrap()
            .unwrap();
        assert_eq!(w.columns, inj(&[(1, 2), (2, 5)]));
        assert!(eq_divides(&mono("x[1,1]^2"), &mono("x[1,3]*x[1,4]"), INC1)
            .unwrap()
            .is_none());
    }

    #[test]
    fn sym_versus_inc() {
        let m = mono("x[1,1]*x[2,2]");
        let n = mono("x[1,5]*x[2,3]");
        let w = eq_divides(&m, &n, SYM2).unwrap().unwrap();
        assert_eq!(w.columns, inj(&[(1, 5), (2, 3)]));
        assert!(w.apply(&m).divides(&n));
        assert!(eq_divides(&m, &n, INC2).unwrap().is_none());
    }

    #[test]
    fn inc_never_moves_columns_down() {
        assert!(eq_divides(&mono("x[1,2]"), &mono("x[1,1]"), INC1).unwrap().is_none());
        // the gap between columns 1 and 3 cannot shrink
        assert!(eq_divides(&mono("x[1,1]*x[1,3]"), &mono("x[1,4]*x[1,5]"), INC1)
            .unwrap()
            .is_none());
        assert!(eq_divides(&mono("x[1,1]*x[1,3]"), &mono("x[1,4]*x[1,6]"), INC1)
            .unwrap()
            .is_some());
    }

    #[test]
    fn sym_matching_needs_augmenting_paths() {
        // greedy would send column 1 to column 3 and get stuck
        let m = mono("x[1,1]*x[1,2]*x[2,2]");
        let n = mono("x[1,3]*x[2,3]*x[1,4]");
        let w = eq_divides(&m, &n, SYM2).unwrap().unwrap();
        assert_eq!(w.columns, inj(&[(1, 4), (2, 3)]));
    }

    #[test]
    fn pair_examples() {
        let m = mono("y[1,1]*y[2,2]");
        let n = mono("y[5,7]*y[3,9]*y[1,1]");
        let w = eq_divides(&m, &n, SymmetryType::PairSym).unwrap().unwrap();
        assert!(w.apply(&m).divides(&n));
        // a 4-cycle does not embed in a 6-cycle
        let c4 = mono("y[1,1]*y[1,2]*y[2,2]*y[2,1]");
        let c6 = mono("y[1,1]*y[1,2]*y[2,2]*y[2,3]*y[3,3]*y[3,1]");
        assert!(eq_divides(&c4, &c6, SymmetryType::PairSym).unwrap().is_none());
        assert!(eq_divides(&c4, &c4, SymmetryType::PairSym).unwrap().is_some());
    }
}
