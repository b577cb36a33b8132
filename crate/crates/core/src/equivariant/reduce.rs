use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Polynomial, TermOrder};
use crate::symmetry::SymmetryType;

use super::divides::inc_witness_contents;
use super::translate::sym_to_inc_generators;

/// A basis element prepared for increasing-map reduction.
pub(crate) struct Reducer<'a, F: Field> {
    pub poly: &'a Polynomial<F>,
    lc_inv: F,
    lm_cols: Vec<u32>,
    lm_contents: Vec<(u32, Vec<(u32, u32)>)>,
    lm_degree: u32,
}

impl<'a, F: Field> Reducer<'a, F> {
    pub fn new(poly: &'a Polynomial<F>) -> Option<Self> {
        let (lm, lc) = poly.leading_term()?;
        Some(Reducer {
            poly,
            lc_inv: lc.inv(),
            lm_cols: lm.columns(),
            lm_contents: lm.column_contents(),
            lm_degree: lm.degree(),
        })
    }

    /// Extends the placement of the leading monomial's columns to an increasing
    /// map: columns below the support stay put, the rest keep their offset from
    /// the nearest support column below them.
    fn place(&self, targets: &[u32], j: u32) -> u32 {
        match self.lm_cols.partition_point(|&s| s <= j) {
            0 => j,
            i => targets[i - 1] + (j - self.lm_cols[i - 1]),
        }
    }

    /// The image `pi * g` for the least `pi` with `pi * lm(g) | t`, given the
    /// column contents and degree of `t`.
    fn image_dividing(&self, t: &[(u32, Vec<(u32, u32)>)], degree: u32) -> Option<Polynomial<F>> {
        if self.lm_degree > degree || self.lm_contents.len() > t.len() {
            return None;
        }
        let targets = inc_witness_contents(&self.lm_contents, t)?;
        Some(self.poly.map_columns(|j| self.place(&targets, j)))
    }
}

/// Remainder of `f` after increasing-map reduction by `reducers`.
pub(crate) fn inc_reduce<F: Field>(f: &Polynomial<F>, reducers: &[Reducer<'_, F>]) -> Polynomial<F> {
    reduce_terms(f, reducers, false)
}

/// Cancels leading terms only, stopping at the first irreducible one.
pub(crate) fn inc_top_reduce<F: Field>(f: &Polynomial<F>, reducers: &[Reducer<'_, F>]) -> Polynomial<F> {
    reduce_terms(f, reducers, true)
}

fn reduce_terms<F: Field>(f: &Polynomial<F>, reducers: &[Reducer<'_, F>], top: bool) -> Polynomial<F> {
    let mut work = f.clone();
    let mut rem = Polynomial::zero();
    while let Some((t, c)) = work.remove_leading() {
        let (contents, degree) = (t.column_contents(), t.degree());
        let hit = reducers
            .iter()
            .find_map(|r| r.image_dividing(&contents, degree).map(|img| (r, img)));
        match hit {
            Some((r, img)) => {
                let q = img.lm().unwrap().quotient_of(&t).unwrap();
                let factor = -(c * r.lc_inv.clone());
                for (gm, gc) in img.terms().skip(1) {
                    work.add_term(factor.clone() * gc.clone(), gm.mul(&q));
                }
            }
            None => {
                rem.add_term(c, t);
                if top {
                    return &rem + &work;
                }
            }
        }
    }
    rem
}

/// Equivariant division remainder of `f` by `basis`.
///
/// Repeatedly takes the greatest term of the running remainder and the first
/// basis element whose leading monomial divides it after an increasing column
/// map, and cancels that term. Sym bases are first rewritten with
/// [`sym_to_inc_generators`]; the pair action has no reduction engine.
pub fn eq_reduce<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    symmetry: SymmetryType,
    _order: TermOrder,
) -> Result<Polynomial<F>> {
    symmetry.check_poly(f)?;
    match symmetry {
        SymmetryType::IncColumns { .. } => {
            for g in basis {
                symmetry.check_poly(g)?;
            }
            let reducers: Vec<_> = basis.iter().filter_map(Reducer::new).collect();
            Ok(inc_reduce(f, &reducers))
        }
        SymmetryType::SymColumns { rows } => {
            let mut expanded = Vec::new();
            for g in basis {
                expanded.extend(sym_to_inc_generators(g, rows)?);
            }
            let reducers: Vec<_> = expanded.iter().filter_map(Reducer::new).collect();
            Ok(inc_reduce(f, &reducers))
        }
        SymmetryType::PairSym => Err(Error::Unsupported(
            "the pair action has no reduction engine".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s).unwrap()
    }

    const INC1: SymmetryType = SymmetryType::IncColumns { rows: 1 };
    const O: TermOrder = TermOrder::LexColMajor;

    #[test]
    fn examples() {
        assert!(eq_reduce(&p("x[1,3]^2"), &[p("x[1,1]^2")], INC1, O).unwrap().is_zero());
        assert_eq!(
            eq_reduce(&p("x[1,2]^2 + x[1,1]"), &[p("x[1,1]^2")], INC1, O).unwrap(),
            p("x[1,1]")
        );
        let f = p("3*x[1,4]*x[1,2] - 1");
        assert_eq!(eq_reduce(&f, &[], INC1, O).unwrap(), f);
    }

    #[test]
    fn non_leading_columns_move_with_the_leading_ones() {
        // x[1,4] is hit by x[1,2] - x[1,1] with 2 -> 4 and 1 -> 1
        assert_eq!(
            eq_reduce(&p("x[1,4]"), &[p("x[1,2] - x[1,1]")], INC1, O).unwrap(),
            p("x[1,1]")
        );
        // nothing can reach below column 1
        assert_eq!(
            eq_reduce(&p("x[1,1]"), &[p("x[1,2] - x[1,1]")], INC1, O).unwrap(),
            p("x[1,1]")
        );
        // 1 -> 2 and 3 -> 5; column 2 keeps its offset from column 1 and lands on 3
        let g = p("x[1,1]*x[1,3] - x[1,2]^2");
        let r = eq_reduce(&p("x[1,2]*x[1,5]"), &[g], INC1, O).unwrap();
        assert_eq!(r, p("x[1,3]^2"));
    }

    #[test]
    fn sym_bases_are_permuted_first() {
        let sym = SymmetryType::SymColumns { rows: 2 };
        let basis = [p("x[1,1]*x[2,2]")];
        assert!(eq_reduce(&p("x[1,5]*x[2,3]"), &basis, sym, O).unwrap().is_zero());
        assert!(!eq_reduce(&p("x[1,5]*x[2,3]"), &basis, SymmetryType::IncColumns { rows: 2 }, O)
            .unwrap()
            .is_zero());
        assert!(matches!(
            eq_reduce(&p("y[1,1]"), &[], SymmetryType::PairSym, O),
            Err(Error::Unsupported(_))
        ));
    }
}
