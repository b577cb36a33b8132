//! Combinatorics of the five highly homogeneous relation kinds on the
//! canonical carrier.
//!
//! A finite tuple of distinct positive integers stands for a finite subset of a
//! dense homogeneous linearly ordered set; only its rank pattern matters. Each
//! kind acts on rank patterns through a value-symmetry group: trivial for a
//! linear order, reversal for betweenness, rotations for a cyclic order, the
//! dihedral group for separation, and everything for the full symmetric group.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutations};

/// Largest `n` the growth enumeration accepts by default.
pub const DEFAULT_GROWTH_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationKind {
    FullSymmetric,
    LinearOrder,
    Betweenness,
    CyclicOrder,
    Separation,
}

impl RelationKind {
    pub const ALL: [RelationKind; 5] = [
        RelationKind::FullSymmetric,
        RelationKind::LinearOrder,
        RelationKind::Betweenness,
        RelationKind::CyclicOrder,
        RelationKind::Separation,
    ];

    /// Arity of the defining relation (0 for the bare set).
    pub fn arity(self) -> usize {
        match self {
            RelationKind::FullSymmetric => 0,
            RelationKind::LinearOrder => 2,
            RelationKind::Betweenness | RelationKind::CyclicOrder => 3,
            RelationKind::Separation => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RelationKind::FullSymmetric => "full",
            RelationKind::LinearOrder => "order",
            RelationKind::Betweenness => "betweenness",
            RelationKind::CyclicOrder => "cyclic",
            RelationKind::Separation => "separation",
        }
    }

    /// Whether the defining relation holds on `tuple` (which has length `arity()`).
    fn holds(self, t: &[u32]) -> bool {
        match self {
            RelationKind::FullSymmetric => true,
            RelationKind::LinearOrder => t[0] < t[1],
            RelationKind::Betweenness => between(t[0], t[1], t[2]),
            RelationKind::CyclicOrder => cyclic(t[0], t[1], t[2]),
            RelationKind::Separation => separates(t[0], t[1], t[2], t[3]),
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RelationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "full" | "sym" | "fullsymmetric" | "full-symmetric" => Ok(RelationKind::FullSymmetric),
            "order" | "linear" | "linearorder" | "linear-order" => Ok(RelationKind::LinearOrder),
            "betweenness" | "between" => Ok(RelationKind::Betweenness),
            "cyclic" | "cyclicorder" | "cyclic-order" => Ok(RelationKind::CyclicOrder),
            "separation" | "sep" => Ok(RelationKind::Separation),
            _ => Err(Error::parse(0, format!("unknown relation kind `{s}`"))),
        }
    }
}

/// `B(x; y, z)`: x lies strictly between y and z.
pub fn between(x: u32, y: u32, z: u32) -> bool {
    (y < x && x < z) || (z < x && x < y)
}

/// `K(a, b, c)`: a, b, c occur in this cyclic order.
pub fn cyclic(a: u32, b: u32, c: u32) -> bool {
    (a < b && b < c) || (b < c && c < a) || (c < a && a < b)
}

/// `S(a, b; c, d)`: the pair {a, b} separates {c, d} on the circle.
pub fn separates(a: u32, b: u32, c: u32, d: u32) -> bool {
    cyclic(a, c, b) != cyclic(a, d, b)
}

/// A finite injective map between positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinitePartialInjection {
    pairs: Vec<(u32, u32)>,
}

impl FinitePartialInjection {
    pub fn new(mut pairs: Vec<(u32, u32)>) -> Result<Self> {
        pairs.sort_unstable();
        let mut targets = HashSet::new();
        for (i, &(s, t)) in pairs.iter().enumerate() {
            if s == 0 || t == 0 {
                return Err(Error::InvalidTuple(format!(
                    "indices must be positive, got {s}->{t}"
                )));
            }
            if i > 0 && pairs[i - 1].0 == s {
                return Err(Error::InvalidTuple(format!("source {s} mapped twice")));
            }
            if !targets.insert(t) {
                return Err(Error::InvalidTuple(format!("target {t} hit twice")));
            }
        }
        Ok(FinitePartialInjection { pairs })
    }

    pub fn identity(points: impl IntoIterator<Item = u32>) -> Self {
        let pairs: BTreeSet<u32> = points.into_iter().collect();
        FinitePartialInjection {
            pairs: pairs.into_iter().map(|p| (p, p)).collect(),
        }
    }

    /// Pairs sorted by source.
    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn sources(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|p| p.0)
    }

    pub fn targets(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|p| p.1)
    }

    pub fn apply(&self, s: u32) -> Option<u32> {
        self.pairs
            .binary_search_by_key(&s, |p| p.0)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    /// `self ∘ first`: defined where `first` lands in the domain of `self`.
    pub fn after(&self, first: &FinitePartialInjection) -> FinitePartialInjection {
        FinitePartialInjection {
            pairs: first
                .pairs
                .iter()
                .filter_map(|&(s, t)| self.apply(t).map(|u| (s, u)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> FinitePartialInjection {
        let mut pairs: Vec<_> = self.pairs.iter().map(|&(s, t)| (t, s)).collect();
        pairs.sort_unstable();
        FinitePartialInjection { pairs }
    }
}

impl fmt::Display for FinitePartialInjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, t)) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}->{t}")?;
        }
        write!(f, "}}")
    }
}

/// Rank sequence of a tuple of distinct entries.
pub fn pattern(tuple: &[u32]) -> Result<Vec<u32>> {
    if tuple.is_empty() {
        return Err(Error::InvalidTuple("empty tuple".into()));
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidTuple(format!("duplicate entries in {tuple:?}")));
    }
    Ok(tuple
        .iter()
        .map(|x| sorted.binary_search(x).unwrap() as u32 + 1)
        .collect())
}

fn reverse_ranks(p: &[u32]) -> Vec<u32> {
    let n = p.len() as u32;
    p.iter().map(|&r| n + 1 - r).collect()
}

fn shift_ranks(p: &[u32], k: u32) -> Vec<u32> {
    let n = p.len() as u32;
    p.iter().map(|&r| (r + k - 1) % n + 1).collect()
}

/// Lexicographically least image of a rank pattern under the kind's value symmetries.
fn canonical_pattern(kind: RelationKind, p: Vec<u32>) -> Vec<u32> {
    let n = p.len() as u32;
    match kind {
        RelationKind::FullSymmetric => (1..=n).collect(),
        RelationKind::LinearOrder => p,
        RelationKind::Betweenness => {
            let r = reverse_ranks(&p);
            p.min(r)
        }
        RelationKind::CyclicOrder => (0..n).map(|k| shift_ranks(&p, k)).min().unwrap(),
        RelationKind::Separation => {
            let r = reverse_ranks(&p);
            (0..n)
                .flat_map(|k| [shift_ranks(&p, k), shift_ranks(&r, k)])
                .min()
                .unwrap()
        }
    }
}

/// Orbit invariant of a tuple under the automorphism group of `kind`.
pub fn canonical_tuple(kind: RelationKind, tuple: &[u32]) -> Result<Vec<u32>> {
    Ok(canonical_pattern(kind, pattern(tuple)?))
}

/// Whether `sigma` preserves the relation of `kind` on every tuple of its sources.
///
/// On a dense homogeneous carrier this is exactly extendability of `sigma` to an
/// automorphism of the relational structure.
pub fn extendable(kind: RelationKind, sigma: &FinitePartialInjection) -> bool {
    let arity = kind.arity();
    if arity == 0 || sigma.len() < arity {
        return true;
    }
    let src: Vec<u32> = sigma.sources().collect();
    let dst: Vec<u32> = sigma.targets().collect();
    let mut idx = vec![0usize; arity];
    preserves_all(kind, &src, &dst, &mut idx, 0)
}

fn preserves_all(
    kind: RelationKind,
    src: &[u32],
    dst: &[u32],
    idx: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == idx.len() {
        let a: Vec<u32> = idx.iter().map(|&i| src[i]).collect();
        let b: Vec<u32> = idx.iter().map(|&i| dst[i]).collect();
        return kind.holds(&a) == kind.holds(&b);
    }
    for i in 0..src.len() {
        if idx[..depth].contains(&i) {
            continue;
        }
        idx[depth] = i;
        if !preserves_all(kind, src, dst, idx, depth + 1) {
            return false;
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthRow {
    pub tuple_orbits: u64,
    pub subset_orbits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrowthTable {
    pub kind: RelationKind,
    pub rows: BTreeMap<usize, GrowthRow>,
}

impl GrowthTable {
    pub fn highly_transitive_at(&self, n: usize) -> Option<bool> {
        self.rows.get(&n).map(|r| r.tuple_orbits == 1)
    }

    pub fn highly_homogeneous_at(&self, n: usize) -> Option<bool> {
        self.rows.get(&n).map(|r| r.subset_orbits == 1)
    }
}

/// Orbit counts on distinct `n`-tuples and on `n`-subsets for every `n <= n_max`.
pub fn growth(kind: RelationKind, n_max: usize) -> Result<GrowthTable> {
    growth_with_cap(kind, n_max, DEFAULT_GROWTH_CAP)
}

pub fn growth_with_cap(kind: RelationKind, n_max: usize, cap: usize) -> Result<GrowthTable> {
    if n_max == 0 {
        return Err(Error::InvalidTuple("n must be positive".into()));
    }
    if n_max > cap {
        return Err(Error::BudgetExceeded(format!(
            "growth enumeration up to n = {n_max} exceeds cap {cap}"
        )));
    }
    let mut rows = BTreeMap::new();
    for n in 1..=n_max {
        let identity: Vec<u32> = (1..=n as u32).collect();
        let mut tuple_classes = HashSet::new();
        let mut subset_classes = HashSet::new();
        for p in Permutations::new(identity) {
            // a subset is represented by its increasing enumeration
            let mut sorted = p.clone();
            sorted.sort_unstable();
            subset_classes.insert(canonical_pattern(kind, sorted));
            tuple_classes.insert(canonical_pattern(kind, p));
        }
        let row = GrowthRow {
            tuple_orbits: tuple_classes.len() as u64,
            subset_orbits: subset_classes.len() as u64,
        };
        debug_assert!(row.subset_orbits <= row.tuple_orbits);
        debug_assert!(row.tuple_orbits <= factorial(n));
        rows.insert(n, row);
    }
    Ok(GrowthTable { kind, rows })
}
