//! Ascending chains of equivariant ideals.

use serde::Serialize;

use super::buchberger::{eq_buchberger, eq_member, Budget};
use super::divides::eq_divides;
use super::ideal::EquivariantIdeal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::perm::injective_tuples;
use crate::poly::{Monomial, Polynomial, TermOrder, Var};
use crate::symmetry::SymmetryType;

/// Exhaustive proof that `divisor` has no image dividing `target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NoWitnessCertificate {
    pub divisor: String,
    pub target: String,
    /// Row and column injection pairs tried, all failing.
    pub injection_pairs_checked: u64,
}

/// A generator of stage `stage + 1` outside the ideal of stage `stage`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthWitness {
    pub stage: usize,
    pub generator: String,
    /// Filled for the pair action, one entry per generator of stage `stage`.
    pub certificates: Vec<NoWitnessCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ChainReport {
    /// Stage `stage + 1` adds nothing to stage `stage` (stages are 1-based).
    Stabilized {
        stage: usize,
        witnesses: Vec<GrowthWitness>,
    },
    NoStabilizationWithinHorizon {
        horizon: usize,
        witnesses: Vec<GrowthWitness>,
    },
}

impl ChainReport {
    pub fn stabilized_at(&self) -> Option<usize> {
        match self {
            ChainReport::Stabilized { stage, .. } => Some(*stage),
            ChainReport::NoStabilizationWithinHorizon { .. } => None,
        }
    }

    pub fn witnesses(&self) -> &[GrowthWitness] {
        match self {
            ChainReport::Stabilized { witnesses, .. }
            | ChainReport::NoStabilizationWithinHorizon { witnesses, .. } => witnesses,
        }
    }
}

/// Finds the first stage whose successor adds nothing new, checking stages
/// `1..=min(horizon, stages.len() - 1)`. A single stage counts as stabilized.
///
/// Inc and Sym decide membership with Groebner bases. The pair action accepts
/// monomial generators only and compares them by exhaustive divisibility.
pub fn chain_analyze<F: Field>(
    symmetry: SymmetryType,
    stages: &[Vec<Polynomial<F>>],
    horizon: usize,
) -> Result<ChainReport> {
    chain_analyze_with_budget(symmetry, stages, horizon, Budget::default())
}

pub fn chain_analyze_with_budget<F: Field>(
    symmetry: SymmetryType,
    stages: &[Vec<Polynomial<F>>],
    horizon: usize,
    budget: Budget,
) -> Result<ChainReport> {
    if stages.is_empty() {
        return Err(Error::ShapeError("a chain needs at least one stage".into()));
    }
    if horizon == 0 {
        return Err(Error::ShapeError("horizon must be positive".into()));
    }
    for g in stages.iter().flatten() {
        symmetry.check_poly(g)?;
    }
    if symmetry == SymmetryType::PairSym {
        if let Some(g) = stages.iter().flatten().find(|g| g.len() > 1) {
            return Err(Error::Unsupported(format!(
                "pair chains need monomial generators, got `{}`",
                g.display_with('y')
            )));
        }
    }
    if stages.len() == 1 {
        return Ok(ChainReport::Stabilized {
            stage: 1,
            witnesses: Vec::new(),
        });
    }
    let letter = symmetry.shape().letter();
    let mut witnesses = Vec::new();
    let last = horizon.min(stages.len() - 1);
    for j in 1..=last {
        let (current, next) = (&stages[j - 1], &stages[j]);
        let grown = match symmetry {
            SymmetryType::PairSym => pair_growth(j, current, next)?,
            _ => {
                let ideal = EquivariantIdeal::new(symmetry, current.clone())?;
                let gb = eq_buchberger(&ideal, TermOrder::LexColMajor, budget)?;
                let mut found = None;
                for g in next {
                    if !eq_member(g, &gb)? {
                        found = Some(GrowthWitness {
                            stage: j,
                            generator: g.display_with(letter),
                            certificates: Vec::new(),
                        });
                        break;
                    }
                }
                found
            }
        };
        match grown {
            Some(w) => witnesses.push(w),
            None => return Ok(ChainReport::Stabilized { stage: j, witnesses }),
        }
    }
    Ok(ChainReport::NoStabilizationWithinHorizon {
        horizon: last,
        witnesses,
    })
}

fn monomial_of<F: Field>(p: &Polynomial<F>) -> Option<&Monomial> {
    p.lm()
}

fn pair_growth<F: Field>(
    stage: usize,
    current: &[Polynomial<F>],
    next: &[Polynomial<F>],
) -> Result<Option<GrowthWitness>> {
    'targets: for h in next {
        let Some(target) = monomial_of(h) else { continue };
        let mut certificates = Vec::new();
        for d in current {
            let Some(divisor) = monomial_of(d) else {
                // the zero generator contributes nothing
                continue;
            };
            if eq_divides(divisor, target, SymmetryType::PairSym)?.is_some() {
                continue 'targets;
            }
            certificates.push(NoWitnessCertificate {
                divisor: divisor.display_with('y'),
                target: target.display_with('y'),
                injection_pairs_checked: exhaustive_pair_check(divisor, target)?,
            });
        }
        return Ok(Some(GrowthWitness {
            stage,
            generator: target.display_with('y'),
            certificates,
        }));
    }
    Ok(None)
}

/// Tries every pair of row and column injections of `m`'s support into `n`'s and
/// returns how many were tried. Fails if one of them makes `m` divide `n`.
pub fn exhaustive_pair_check(m: &Monomial, n: &Monomial) -> Result<u64> {
    let (m_rows, m_cols) = (m.rows(), m.columns());
    let (n_rows, n_cols) = (n.rows(), n.columns());
    let row_maps = injective_tuples(m_rows.len(), n_rows.len() as u32);
    let col_maps = injective_tuples(m_cols.len(), n_cols.len() as u32);
    let mut checked = 0u64;
    for rm in &row_maps {
        for cm in &col_maps {
            checked += 1;
            let image = m.map_vars(|v| {
                Var::new(
                    n_rows[rm[m_rows.binary_search(&v.row).unwrap()] as usize - 1],
                    n_cols[cm[m_cols.binary_search(&v.col).unwrap()] as usize - 1],
                )
            });
            if image.divides(n) {
                return Err(Error::InvalidTuple(format!(
                    "`{}` divides `{}` after relabeling",
                    m.display_with('y'),
                    n.display_with('y')
                )));
            }
        }
    }
    Ok(checked)
}

/// `y[1,1]*y[2,2]*...*y[j,j]`.
pub fn diagonal_monomial(j: u32) -> Monomial {
    Monomial::from_exps((1..=j).map(|i| (Var::new(i, i), 1)))
}

/// Cycle of length `2j` in the row/column incidence graph:
/// `y[1,1]*y[1,2]*y[2,2]*y[2,3]*...*y[j,j]*y[j,1]`, for `j >= 2`.
pub fn cycle_monomial(j: u32) -> Monomial {
    assert!(j >= 2, "cycles need at least two rows");
    Monomial::from_exps((1..=j).flat_map(|i| [(Var::new(i, i), 1), (Var::new(i, i % j + 1), 1)]))
}

/// Stages `{d_1}, {d_1, d_2}, ..., {d_1, ..., d_n}` of diagonal monomials.
pub fn diagonal_chain<F: Field>(n: u32) -> Vec<Vec<Polynomial<F>>> {
    nested((1..=n).map(diagonal_monomial))
}

/// Stages `{c_2}, {c_2, c_3}, ...` of `n` cycle monomials.
pub fn cycle_chain<F: Field>(n: u32) -> Vec<Vec<Polynomial<F>>> {
    nested((2..n + 2).map(cycle_monomial))
}

fn nested<F: Field>(gens: impl Iterator<Item = Monomial>) -> Vec<Vec<Polynomial<F>>> {
    let mut stages: Vec<Vec<Polynomial<F>>> = Vec::new();
    for g in gens {
        let mut stage = stages.last().cloned().unwrap_or_default();
        stage.push(Polynomial::monomial(g));
        stages.push(stage);
    }
    stages
}
