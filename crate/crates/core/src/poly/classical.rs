//! Plain (non-equivariant) division and Buchberger completion. Inside a finite
//! truncation these are the reference engine the equivariant code is checked
//! against.

use std::collections::BTreeSet;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::polynomial::Polynomial;
use crate::field::Field;

/// Multivariate division remainder of `f` by `basis`.
///
/// Always rewrites the greatest reducible term, using the first basis element
/// (in list order) whose leading monomial divides it. Zero basis entries are skipped.
pub fn reduce_classical<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    _order: TermOrder,
) -> Polynomial<F> {
    let leads: Vec<(&Monomial, F, &Polynomial<F>)> = basis
        .iter()
        .filter_map(|g| g.leading_term().map(|(m, c)| (m, c.inv(), g)))
        .collect();
    let mut work = f.clone();
    let mut rem = Polynomial::zero();
    while let Some((m, c)) = work.remove_leading() {
        let hit = leads.iter().find(|(lm, _, _)| lm.divides(&m));
        match hit {
            Some((lm, lc_inv, g)) => {
                let q = lm.quotient_of(&m).unwrap();
                let factor = -(c * lc_inv.clone());
                // the leading term of g cancels against the removed term
                for (gm, gc) in g.terms().skip(1) {
                    work.add_term(factor.clone() * gc.clone(), gm.mul(&q));
                }
            }
            None => rem.add_term(c, m),
        }
    }
    rem
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let mut out = f
        .mul_monomial(&fm.quotient_of(&l).unwrap())
        .scale(&gc.clone());
    out.add_scaled(
        &-fc.clone(),
        &gm.quotient_of(&l).unwrap(),
        g,
    );
    out
}

/// Reduced Groebner basis of the ideal generated by `gens`: monic, sorted by
/// ascending leading monomial. Zero generators are dropped.
pub fn buchberger_classical<F: Field>(gens: &[Polynomial<F>], order: TermOrder) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = Vec::new();
    let mut pairs: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();

    let mut pending: Vec<Polynomial<F>> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    pending.sort_by(|a, b| a.lm().cmp(&b.lm()));
    for g in pending {
        let r = reduce_classical(&g, &basis, order);
        if !r.is_zero() {
            add_to_basis(&mut basis, &mut pairs, r.monic());
        }
    }

    // normal strategy: smallest lcm first
    while let Some((lcm, i, j)) = pairs.pop_first() {
        if chain_criterion(&basis, &pairs, &lcm, i, j) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce_classical(&s, &basis, order);
        if !r.is_zero() {
            add_to_basis(&mut basis, &mut pairs, r.monic());
        }
    }
    interreduce(basis, order)
}

fn add_to_basis<F: Field>(
    basis: &mut Vec<Polynomial<F>>,
    pairs: &mut BTreeSet<(Monomial, usize, usize)>,
    g: Polynomial<F>,
) {
    let k = basis.len();
    let gm = g.lm().unwrap().clone();
    for (i, b) in basis.iter().enumerate() {
        let bm = b.lm().unwrap();
        if bm.is_coprime(&gm) {
            continue;
        }
        pairs.insert((bm.lcm(&gm), i, k));
    }
    basis.push(g);
}

/// Drop `(i, j)` when some other element's leading monomial divides the lcm and
/// both pairs with it have already been treated.
fn chain_criterion<F: Field>(
    basis: &[Polynomial<F>],
    pairs: &BTreeSet<(Monomial, usize, usize)>,
    lcm: &Monomial,
    i: usize,
    j: usize,
) -> bool {
    let pending = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        let l = basis[a].lm().unwrap().lcm(basis[b].lm().unwrap());
        pairs.contains(&(l, a, b))
    };
    basis.iter().enumerate().any(|(k, h)| {
        k != i
            && k != j
            && h.lm().unwrap().divides(lcm)
            && !pending(i, k)
            && !pending(j, k)
    })
}

/// Minimalizes and tail-reduces a Groebner basis, returning it sorted.
pub fn interreduce<F: Field>(basis: Vec<Polynomial<F>>, order: TermOrder) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| a.lm().cmp(&b.lm()));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in basis {
        let lm = g.lm().unwrap();
        if !minimal.iter().any(|h| h.lm().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let (lm, lc) = minimal[i].leading_term().unwrap();
        let mut tail = minimal[i].clone();
        tail.remove_leading();
        let others: Vec<Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, h)| h.clone())
            .collect();
        let mut g = reduce_classical(&tail, &others, order);
        g.add_term(lc.clone(), lm.clone());
        out.push(g.monic());
    }
    out
}

/// Whether `f` lies in the ideal with Groebner basis `gb`.
pub fn member_classical<F: Field>(f: &Polynomial<F>, gb: &[Polynomial<F>], order: TermOrder) -> bool {
    reduce_classical(f, gb, order).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::poly::parse::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s).unwrap()
    }

    const O: TermOrder = TermOrder::LexColMajor;

    #[test]
    fn reduce_examples() {
        assert!(reduce_classical(&p("x[1,1]^2"), &[p("x[1,1]")], O).is_zero());
        assert_eq!(reduce_classical(&p("x[1,2] + 1"), &[p("x[1,1]")], O), p("x[1,2] + 1"));
        assert_eq!(
            reduce_classical(&p("x[1,1]*x[1,2] + x[1,2]"), &[p("x[1,2] - x[1,1]")], O),
            p("x[1,1]^2 + x[1,1]")
        );
        assert_eq!(reduce_classical(&p("x[1,3]"), &[], O), p("x[1,3]"));
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(buchberger_classical(&[p("x[1,1]^2")], O), vec![p("x[1,1]^2")]);
        assert!(buchberger_classical::<Rational>(&[], O).is_empty());
        assert_eq!(
            buchberger_classical(&[p("x[1,2] - x[1,1]"), p("x[1,3] - x[1,2]")], O),
            vec![p("x[1,2] - x[1,1]"), p("x[1,3] - x[1,1]")]
        );
        assert_eq!(buchberger_classical(&[p("0"), p("2*x[1,1]")], O), vec![p("x[1,1]")]);
        assert_eq!(buchberger_classical(&[p("x[1,1]"), p("x[1,1] + 1")], O), vec![p("1")]);
    }

    #[test]
    fn cyclic_three_sanity() {
        // a classical benchmark ideal, one column per variable
        let gens = [
            p("x[1,1] + x[1,2] + x[1,3]"),
            p("x[1,1]*x[1,2] + x[1,2]*x[1,3] + x[1,3]*x[1,1]"),
            p("x[1,1]*x[1,2]*x[1,3] - 1"),
        ];
        let gb = buchberger_classical(&gens, O);
        for g in &gens {
            assert!(member_classical(g, &gb, O));
        }
        assert!(!member_classical(&p("x[1,1] - 1"), &gb, O));
        // every S-pair reduces to zero
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                assert!(reduce_classical(&s_polynomial(&gb[i], &gb[j]), &gb, O).is_zero());
            }
        }
    }
}
