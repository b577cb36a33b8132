//! Fixtures shared by the benchmarks.

use equinoether::corpus::{inc_corpus, CorpusParams};
use equinoether::equivariant::EquivariantIdeal;
use equinoether::{Monomial, Rational};

/// The first `count` ideals of the seeded two-term corpus.
pub fn ideals(count: usize) -> Vec<EquivariantIdeal<Rational>> {
    let params = CorpusParams {
        max_terms: 2,
        ..CorpusParams::default()
    };
    inc_corpus(2024, count, &params)
}

/// Pairs of monomials with a spread of column widths.
pub fn monomial_pairs() -> Vec<(Monomial, Monomial)> {
    (1..=6u32)
        .map(|w| {
            let small: Vec<_> = (1..=w).map(|c| (1 + c % 2, c, 1 + c % 3)).collect();
            let big: Vec<_> = (1..=3 * w).map(|c| (1 + c % 2, c, 2 + c % 2)).collect();
            (Monomial::from_triples(&small), Monomial::from_triples(&big))
        })
        .collect()
}
