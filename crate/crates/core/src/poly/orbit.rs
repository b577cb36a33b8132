//! Orbit representatives and truncated orbits under the column actions.

use std::collections::HashSet;

use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::perm::{factorial, injective_tuples, Permutations};
use crate::symmetry::{SymmetryType, TruncationContext};

/// Largest number of distinct indices per coordinate handled by exhaustive pair search.
pub const DEFAULT_PAIR_CAP: usize = 8;
/// Upper bound on `|rows|! * |cols|!` for exhaustive pair canonicalization.
pub const PAIR_CANON_WORK_CAP: u64 = 5_000_000;
/// Largest orbit `orbit_expand` will materialize.
pub const DEFAULT_ORBIT_CAP: usize = 200_000;

/// Compresses the columns of `m` onto `1..w`, preserving their order.
pub fn compress_columns(m: &Monomial) -> Monomial {
    let cols = m.columns();
    m.map_columns(|c| cols.binary_search(&c).unwrap() as u32 + 1)
}

/// Compresses both coordinates onto initial segments, preserving order.
fn compress_pair(m: &Monomial) -> Monomial {
    let cols = m.columns();
    let rows = m.rows();
    m.map_vars(|v| {
        Var::new(
            rows.binary_search(&v.row).unwrap() as u32 + 1,
            cols.binary_search(&v.col).unwrap() as u32 + 1,
        )
    })
}

/// Orbit representative of a monomial.
///
/// * Inc: columns compressed onto `1..w` (every increasing image has the same form).
/// * Sym: compressed, then the column arrangement minimizing the term order.
///   The minimum places column contents in descending order from column 1, so a
///   sort replaces the search over `w!` arrangements.
/// * PairSym: minimum over independent relabelings of rows and columns, by
///   exhaustive search.
pub fn canonicalize(m: &Monomial, symmetry: SymmetryType) -> Result<Monomial> {
    symmetry.check_monomial(m)?;
    match symmetry {
        SymmetryType::IncColumns { .. } => Ok(compress_columns(m)),
        SymmetryType::SymColumns { .. } => {
            let mut contents: Vec<Vec<(u32, u32)>> =
                m.column_contents().into_iter().map(|(_, c)| c).collect();
            // contents compare like the monomial tails they produce
            contents.sort_by(|a, b| b.cmp(a));
            Ok(Monomial::from_exps(contents.iter().enumerate().flat_map(
                |(i, content)| {
                    content
                        .iter()
                        .map(move |&(row, e)| (Var::new(row, i as u32 + 1), e))
                },
            )))
        }
        SymmetryType::PairSym => canonicalize_pair(m),
    }
}

fn canonicalize_pair(m: &Monomial) -> Result<Monomial> {
    let base = compress_pair(m);
    let nr = base.rows().len();
    let nc = base.columns().len();
    if nr > DEFAULT_PAIR_CAP || nc > DEFAULT_PAIR_CAP {
        return Err(Error::BudgetExceeded(format!(
            "pair canonicalization over {nr} rows x {nc} columns exceeds cap {DEFAULT_PAIR_CAP}"
        )));
    }
    if factorial(nr).saturating_mul(factorial(nc)) > PAIR_CANON_WORK_CAP {
        return Err(Error::BudgetExceeded(format!(
            "pair canonicalization over {nr} rows x {nc} columns exceeds work cap {PAIR_CANON_WORK_CAP}"
        )));
    }
    let mut best: Option<Monomial> = None;
    for col_perm in Permutations::new((1..=nc as u32).collect()) {
        for row_perm in Permutations::new((1..=nr as u32).collect()) {
            let cand = base.map_vars(|v| {
                Var::new(row_perm[v.row as usize - 1], col_perm[v.col as usize - 1])
            });
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    Ok(best.unwrap_or_default())
}

/// Images of `cols` (ascending) under increasing maps of the positive integers
/// that land in `[1..m]`: `c_1 >= s_1` and `c_{i+1} - c_i >= s_{i+1} - s_i`.
pub fn inc_placements(cols: &[u32], m: u32) -> Vec<Vec<u32>> {
    fn rec(cols: &[u32], m: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let i = cur.len();
        if i == cols.len() {
            out.push(cur.clone());
            return;
        }
        let lo = match i {
            0 => cols[0],
            _ => cur[i - 1] + (cols[i] - cols[i - 1]),
        };
        // leave room for the remaining columns
        let tail = cols[cols.len() - 1] - cols[i];
        let mut c = lo;
        while c + tail <= m {
            cur.push(c);
            rec(cols, m, cur, out);
            cur.pop();
            c += 1;
        }
    }
    let mut out = Vec::new();
    rec(cols, m, &mut Vec::with_capacity(cols.len()), &mut out);
    out
}

/// All distinct images of `g` whose indices stay inside `[1..ctx.m]`.
///
/// Inc uses increasing maps of the positive integers, which for a polynomial with
/// columns `1..w` are exactly the strictly increasing placements; Sym uses all
/// injective placements of the columns; PairSym uses pairs of injective placements
/// of rows and columns. The first image is `g` itself whenever it fits.
pub fn orbit_expand<F: Field>(
    g: &Polynomial<F>,
    symmetry: SymmetryType,
    ctx: TruncationContext,
) -> Result<Vec<Polynomial<F>>> {
    orbit_expand_capped(g, symmetry, ctx, DEFAULT_ORBIT_CAP)
}

pub fn orbit_expand_capped<F: Field>(
    g: &Polynomial<F>,
    symmetry: SymmetryType,
    ctx: TruncationContext,
    cap: usize,
) -> Result<Vec<Polynomial<F>>> {
    symmetry.check_poly(g)?;
    let cols = g.columns();
    let too_big = |n: usize| {
        Error::BudgetExceeded(format!("orbit of size {n} exceeds cap {cap}"))
    };
    let relabel = |from: &[u32], to: &[u32], c: u32| to[from.binary_search(&c).unwrap()];
    let mut images: Vec<Polynomial<F>> = match symmetry {
        SymmetryType::IncColumns { .. } => {
            let places = inc_placements(&cols, ctx.m);
            if places.len() > cap {
                return Err(too_big(places.len()));
            }
            places
                .iter()
                .map(|to| g.map_columns(|c| relabel(&cols, to, c)))
                .collect()
        }
        SymmetryType::SymColumns { .. } => {
            let n = crate::perm::falling_factorial(ctx.m as usize, cols.len());
            if n > cap as u64 {
                return Err(too_big(n as usize));
            }
            injective_tuples(cols.len(), ctx.m)
                .iter()
                .map(|to| g.map_columns(|c| relabel(&cols, to, c)))
                .collect()
        }
        SymmetryType::PairSym => {
            let rows = g.rows();
            let n = crate::perm::falling_factorial(ctx.m as usize, cols.len())
                .saturating_mul(crate::perm::falling_factorial(ctx.m as usize, rows.len()));
            if n > cap as u64 {
                return Err(too_big(n as usize));
            }
            let col_places = injective_tuples(cols.len(), ctx.m);
            let row_places = injective_tuples(rows.len(), ctx.m);
            let mut out = Vec::with_capacity(n as usize);
            for rt in &row_places {
                for ct in &col_places {
                    out.push(g.map_vars(|v| {
                        Var::new(relabel(&rows, rt, v.row), relabel(&cols, ct, v.col))
                    }));
                }
            }
            out
        }
    };
    // put g first when it is one of its own images
    if let Some(pos) = images.iter().position(|p| p == g) {
        images[..=pos].rotate_right(1);
    }
    let mut seen = HashSet::new();
    images.retain(|p| seen.insert(p.clone()));
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        p(s).lm().unwrap().clone()
    }

    const INC1: SymmetryType = SymmetryType::IncColumns { rows: 1 };
    const SYM2: SymmetryType = SymmetryType::SymColumns { rows: 2 };

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            canonicalize(&mono("x[1,4]*x[1,9]"), INC1).unwrap(),
            mono("x[1,1]*x[1,2]")
        );
        // the row-2 column content is the larger one, so it takes column 1
        assert_eq!(
            canonicalize(&mono("x[1,5]*x[2,3]"), SYM2).unwrap(),
            mono("x[1,2]*x[2,1]")
        );
        assert_eq!(
            canonicalize(&mono("y[3,7]*y[5,7]"), SymmetryType::PairSym).unwrap(),
            mono("y[1,1]*y[2,1]")
        );
        assert!(canonicalize(&mono("x[3,1]"), SYM2).is_err());
    }

    #[test]
    fn sym_canonical_form_is_the_brute_force_minimum() {
        let m = mono("x[1,2]^2*x[2,2]*x[1,5]*x[2,7]^3*x[1,9]*x[2,9]");
        let cols = m.columns();
        let best = Permutations::new((1..=cols.len() as u32).collect())
            .map(|perm| m.map_columns(|c| perm[cols.binary_search(&c).unwrap()]))
            .min()
            .unwrap();
        assert_eq!(canonicalize(&m, SYM2).unwrap(), best);
    }

    #[test]
    fn orbit_expand_examples() {
        let ctx = TruncationContext::new(3).unwrap();
        assert_eq!(
            orbit_expand(&p("x[1,1]"), INC1, ctx).unwrap(),
            vec![p("x[1,1]"), p("x[1,2]"), p("x[1,3]")]
        );
        assert_eq!(
            orbit_expand(&p("x[1,1]*x[1,2]"), INC1, ctx).unwrap(),
            vec![p("x[1,1]*x[1,2]"), p("x[1,1]*x[1,3]"), p("x[1,2]*x[1,3]")]
        );
        let ctx2 = TruncationContext::new(2).unwrap();
        assert_eq!(
            orbit_expand(&p("x[1,1]*x[2,2]"), SYM2, ctx2).unwrap(),
            vec![p("x[1,1]*x[2,2]"), p("x[1,2]*x[2,1]")]
        );
    }

    #[test]
    fn inc_images_of_uncompressed_polynomials_only_move_up() {
        let ctx = TruncationContext::new(4).unwrap();
        let orbit = orbit_expand(&p("x[1,3]"), INC1, ctx).unwrap();
        assert_eq!(orbit, vec![p("x[1,3]"), p("x[1,4]")]);
        assert_eq!(inc_placements(&[1, 3], 4), vec![vec![1, 3], vec![1, 4], vec![2, 4]]);
    }

    #[test]
    fn orbit_cap() {
        let ctx = TruncationContext::new(8).unwrap();
        let g = p("x[1,1]*x[1,2]*x[1,3]");
        assert!(matches!(
            orbit_expand_capped(&g, SYM2, ctx, 10),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
