use proptest::prelude::*;

use equinoether::equivariant::{eq_divides, eq_reduce};
use equinoether::perm::injective_tuples;
use equinoether::poly::orbit::inc_placements;
use equinoether::relations::{canonical_tuple, extendable};
use equinoether::{
    parse_polynomial, FinitePartialInjection, Monomial, Polynomial, Rational, RelationKind,
    SymmetryType, TermOrder,
};

const INC: SymmetryType = SymmetryType::IncColumns { rows: 2 };
const SYM: SymmetryType = SymmetryType::SymColumns { rows: 2 };

fn monomial(max_col: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((1u32..=2, 1..=max_col, 1u32..=2), 0..=3)
        .prop_map(|t| Monomial::from_triples(&t))
}

fn polynomial(max_col: u32) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, monomial(max_col)), 1..=3).prop_map(|terms| {
        Polynomial::from_terms(terms.into_iter().map(|(c, m)| (Rational::from_integer(c.into()), m)))
    })
}

fn placed(m: &Monomial, targets: &[u32]) -> Monomial {
    let cols = m.columns();
    m.map_columns(|c| targets[cols.iter().position(|&s| s == c).unwrap()])
}

fn brute_inc(m: &Monomial, n: &Monomial) -> bool {
    let cols = m.columns();
    cols.is_empty()
        || inc_placements(&cols, n.max_col())
            .iter()
            .any(|t| placed(m, t).divides(n))
}

fn brute_sym(m: &Monomial, n: &Monomial) -> bool {
    let cols = m.columns();
    let top = n.max_col().max(m.max_col());
    injective_tuples(cols.len(), top)
        .iter()
        .any(|t| placed(m, t).divides(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn inc_divisibility_matches_enumeration(m in monomial(4), n in monomial(7)) {
        let w = eq_divides(&m, &n, INC).unwrap();
        prop_assert_eq!(w.is_some(), brute_inc(&m, &n));
        if let Some(w) = w {
            prop_assert!(w.apply(&m).divides(&n));
            let pairs = w.columns.pairs();
            prop_assert!(pairs.windows(2).all(|p| p[1].1 - p[0].1 >= p[1].0 - p[0].0));
            prop_assert!(pairs.iter().all(|&(s, t)| t >= s));
        }
    }

    #[test]
    fn sym_divisibility_matches_enumeration(m in monomial(4), n in monomial(5)) {
        let w = eq_divides(&m, &n, SYM).unwrap();
        prop_assert_eq!(w.is_some(), brute_sym(&m, &n));
        if let Some(w) = w {
            prop_assert!(w.apply(&m).divides(&n));
        }
    }

    #[test]
    fn printing_round_trips(p in polynomial(6)) {
        let back: Polynomial = parse_polynomial(&p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn remainders_are_reduced(f in polynomial(6), basis in prop::collection::vec(polynomial(3), 1..=2)) {
        let r = eq_reduce(&f, &basis, INC, TermOrder::LexColMajor).unwrap();
        for t in r.monomials() {
            for g in basis.iter().filter_map(|g| g.lm()) {
                prop_assert!(eq_divides(g, t, INC).unwrap().is_none());
            }
        }
    }

    #[test]
    fn extendable_maps_preserve_canonical_forms(
        tuple in Just((1u32..=8).collect::<Vec<_>>()).prop_shuffle(),
        targets in Just((1u32..=8).collect::<Vec<_>>()).prop_shuffle(),
        len in 1usize..=5,
        kind in prop::sample::select(RelationKind::ALL.to_vec()),
    ) {
        let t = &tuple[..len];
        let sigma = FinitePartialInjection::new(t.iter().copied().zip(targets.iter().copied()).collect()).unwrap();
        if extendable(kind, &sigma) {
            let image: Vec<u32> = t.iter().map(|&s| sigma.apply(s).unwrap()).collect();
            prop_assert_eq!(canonical_tuple(kind, t).unwrap(), canonical_tuple(kind, &image).unwrap());
        }
    }
}

#[test]
fn telescoping_member() {
    let g: Polynomial = parse_polynomial("x[1,2] - x[1,1]").unwrap();
    let f: Polynomial = parse_polynomial("x[1,4] - x[1,9]").unwrap();
    let r = eq_reduce(&f, &[g], SymmetryType::IncColumns { rows: 1 }, TermOrder::LexColMajor).unwrap();
    assert!(r.is_zero());
}
