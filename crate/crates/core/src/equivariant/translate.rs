use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::perm::Permutations;
use crate::poly::Polynomial;
use crate::symmetry::SymmetryType;

/// Widest generator `sym_to_inc_generators` will permute.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// Images of `g` under every rearrangement of its support columns onto `1..w`.
///
/// Any injective relabeling of columns is a rearrangement followed by an
/// increasing map, so the increasing-map ideal of these images equals the
/// permutation ideal of `g`. Images are listed in lexicographic order of the
/// rearrangement (identity first) with duplicates removed.
pub fn sym_to_inc_generators<F: Field>(g: &Polynomial<F>, rows: u32) -> Result<Vec<Polynomial<F>>> {
    sym_to_inc_generators_capped(g, rows, DEFAULT_PERMUTATION_CAP)
}

pub fn sym_to_inc_generators_capped<F: Field>(
    g: &Polynomial<F>,
    rows: u32,
    cap: usize,
) -> Result<Vec<Polynomial<F>>> {
    SymmetryType::SymColumns { rows }.check_poly(g)?;
    if g.is_zero() {
        return Ok(Vec::new());
    }
    let cols = g.columns();
    if cols.len() > cap {
        return Err(Error::BudgetExceeded(format!(
            "generator of width {} exceeds permutation cap {cap}",
            cols.len()
        )));
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for perm in Permutations::new((1..=cols.len() as u32).collect()) {
        let image = g.map_columns(|c| perm[cols.binary_search(&c).unwrap()]);
        if seen.insert(image.clone()) {
            out.push(image);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            sym_to_inc_generators(&p("x[1,1]*x[2,2]"), 2).unwrap(),
            vec![p("x[1,1]*x[2,2]"), p("x[1,2]*x[2,1]")]
        );
        assert_eq!(
            sym_to_inc_generators(&p("x[1,1]*x[1,2]"), 1).unwrap(),
            vec![p("x[1,1]*x[1,2]")]
        );
        assert_eq!(sym_to_inc_generators(&p("x[1,1]"), 1).unwrap(), vec![p("x[1,1]")]);
        // columns are compressed as well as permuted
        assert_eq!(sym_to_inc_generators(&p("x[1,7]"), 1).unwrap(), vec![p("x[1,1]")]);
    }

    #[test]
    fn width_cap() {
        let wide = p("x[1,1]*x[1,2]*x[1,3]");
        assert!(matches!(
            sym_to_inc_generators_capped(&wide, 1, 2),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(sym_to_inc_generators(&p("x[2,1]"), 1).is_err());
    }
}
