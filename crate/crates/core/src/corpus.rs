//! Seeded random ideals and polynomials for testing and benchmarking.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equivariant::EquivariantIdeal;
use crate::field::{Field, Rational};
use crate::poly::orbit::inc_placements;
use crate::poly::{Monomial, Polynomial, Var};
use crate::symmetry::SymmetryType;

/// Size limits for random generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusParams {
    pub max_generators: usize,
    pub max_terms: usize,
    pub max_degree: u32,
    pub max_width: u32,
    pub max_rows: u32,
    pub max_coeff: i64,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams {
            max_generators: 3,
            max_terms: 3,
            max_degree: 3,
            max_width: 3,
            max_rows: 2,
            max_coeff: 3,
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A monomial of degree `1..=max_degree` in rows `1..=rows`, columns `1..=cols`.
pub fn random_monomial<R: Rng>(rng: &mut R, rows: u32, cols: u32, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(1..=max_degree);
    (0..degree).fold(Monomial::one(), |m, _| {
        let v = Var::new(rng.gen_range(1..=rows), rng.gen_range(1..=cols));
        m.mul(&Monomial::var(v))
    })
}

fn random_coeff<F: Field, R: Rng>(rng: &mut R, max: i64) -> F {
    let c = rng.gen_range(1..=max);
    F::from_i64(if rng.gen_bool(0.5) { c } else { -c })
}

/// A nonzero polynomial with up to `max_terms` terms, all inside the given box.
pub fn random_polynomial<F: Field, R: Rng>(
    rng: &mut R,
    rows: u32,
    cols: u32,
    params: &CorpusParams,
) -> Polynomial<F> {
    loop {
        let terms = rng.gen_range(1..=params.max_terms);
        let p = Polynomial::from_terms((0..terms).map(|_| {
            (
                random_coeff::<F, _>(rng, params.max_coeff),
                random_monomial(rng, rows, cols, params.max_degree),
            )
        }));
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random generator with columns compressed onto `1..w`.
pub fn random_generator<F: Field, R: Rng>(rng: &mut R, rows: u32, params: &CorpusParams) -> Polynomial<F> {
    let p: Polynomial<F> = random_polynomial(rng, rows, params.max_width, params);
    let cols = p.columns();
    p.map_columns(|c| cols.binary_search(&c).unwrap() as u32 + 1)
}

pub fn random_ideal<F: Field, R: Rng>(
    rng: &mut R,
    symmetry_of: impl Fn(u32) -> SymmetryType,
    params: &CorpusParams,
) -> EquivariantIdeal<F> {
    let rows = rng.gen_range(1..=params.max_rows);
    let n = rng.gen_range(1..=params.max_generators);
    let gens = (0..n).map(|_| random_generator(rng, rows, params)).collect();
    EquivariantIdeal::new(symmetry_of(rows), gens).expect("generators fit their shape")
}

/// `count` random increasing-map ideals from `seed`.
pub fn inc_corpus(seed: u64, count: usize, params: &CorpusParams) -> Vec<EquivariantIdeal<Rational>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_ideal(&mut r, |rows| SymmetryType::IncColumns { rows }, params))
        .collect()
}

/// `count` random permutation ideals from `seed`.
pub fn sym_corpus(seed: u64, count: usize, params: &CorpusParams) -> Vec<EquivariantIdeal<Rational>> {
    let mut r = rng(seed);
    (0..count)
        .map(|_| random_ideal(&mut r, |rows| SymmetryType::SymColumns { rows }, params))
        .collect()
}

/// A polynomial in columns `1..=width` built as a combination of increasing
/// images of the ideal's generators, so it lies in the ideal.
pub fn random_member<F: Field, R: Rng>(
    rng: &mut R,
    ideal: &EquivariantIdeal<F>,
    width: u32,
    params: &CorpusParams,
) -> Polynomial<F> {
    let rows = ideal.symmetry.rows().unwrap_or(1);
    let mut f = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let Some(g) = ideal.generators().choose(rng) else {
            break;
        };
        let cols = g.columns();
        let placements = inc_placements(&cols, width);
        let Some(place) = placements.choose(rng) else {
            continue;
        };
        let image = g.map_columns(|c| place[cols.binary_search(&c).unwrap()]);
        let cofactor = if rng.gen_bool(0.5) {
            Monomial::one()
        } else {
            random_monomial(rng, rows, width, 1)
        };
        f.add_scaled(&random_coeff(rng, params.max_coeff), &cofactor, &image);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_and_bounded() {
        let params = CorpusParams::default();
        let a = inc_corpus(7, 20, &params);
        assert_eq!(a, inc_corpus(7, 20, &params));
        for ideal in &a {
            assert!((1..=3).contains(&ideal.generators().len()));
            for g in ideal.generators() {
                assert!(g.width() <= 3 && g.total_degree() <= 3);
                assert_eq!(g.columns(), (1..=g.width() as u32).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn members_stay_in_the_window() {
        let params = CorpusParams::default();
        let mut r = rng(3);
        for ideal in inc_corpus(11, 10, &params) {
            let f = random_member(&mut r, &ideal, 4, &params);
            assert!(f.max_col() <= 4);
        }
    }
}
