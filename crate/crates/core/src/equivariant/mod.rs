//! Divisibility, reduction, completion and chains under the column actions.

pub mod buchberger;
pub mod chain;
pub mod divides;
pub mod ideal;
pub mod reduce;
pub mod translate;

pub use buchberger::{
    eq_buchberger, eq_buchberger_with_stats, eq_member, eq_remainder, Budget, CompletionStats,
    DEFAULT_SPAIR_BUDGET,
};
pub use chain::{
    chain_analyze, chain_analyze_with_budget, cycle_chain, cycle_monomial, diagonal_chain,
    diagonal_monomial, exhaustive_pair_check, ChainReport, GrowthWitness, NoWitnessCertificate,
};
pub use divides::{eq_divides, Witness};
pub use ideal::{parse_ideal_file, EquivariantIdeal, GroebnerBasis, IdealFile};
pub use reduce::eq_reduce;
pub use translate::{sym_to_inc_generators, sym_to_inc_generators_capped, DEFAULT_PERMUTATION_CAP};
