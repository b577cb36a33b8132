//! Orbits `G/H_T` of pointwise stabilizers, their morphisms, and the sections of
//! the structure sheaf and of free modules over them, checked in finite
//! truncations `Sym([1..m])`.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus;
use crate::error::{Error, Result};
use crate::perm::{injective_tuples, Perm};
use crate::relations::{extendable, FinitePartialInjection, RelationKind};

/// Largest `m` for which the symmetric group on `[1..m]` is enumerated.
pub const DEFAULT_SYM_CAP: usize = 8;
/// Largest `m` for section validation.
pub const DEFAULT_SECTION_CAP: u32 = 12;

/// The orbit `G/H_T`, where `H_T` fixes every point of `T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct OrbitObject {
    points: Vec<u32>,
}

impl OrbitObject {
    pub fn new(points: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut pts: Vec<u32> = points.into_iter().collect();
        pts.sort_unstable();
        if pts.first() == Some(&0) {
            return Err(Error::InvalidTuple("points must be positive".into()));
        }
        if pts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidTuple(format!("repeated point in {pts:?}")));
        }
        Ok(OrbitObject { points: pts })
    }

    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max(&self) -> u32 {
        self.points.last().copied().unwrap_or(0)
    }
}

/// A map `G/H_T -> G/H_L`, recorded by the injection `L -> T` it restricts to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct OrbitMorphism {
    pub source: OrbitObject,
    pub target: OrbitObject,
    pub witness: FinitePartialInjection,
}

impl OrbitMorphism {
    pub fn identity(object: &OrbitObject) -> Self {
        OrbitMorphism {
            source: object.clone(),
            target: object.clone(),
            witness: FinitePartialInjection::identity(object.points.iter().copied()),
        }
    }

    /// `next ∘ self`; witnesses compose in the opposite order.
    pub fn then(&self, next: &OrbitMorphism) -> Result<OrbitMorphism> {
        if self.target != next.source {
            return Err(Error::ShapeError(
                "morphisms do not compose: target and source differ".into(),
            ));
        }
        Ok(OrbitMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            witness: self.witness.after(&next.witness),
        })
    }
}

/// Morphisms `G/H_T -> G/H_L`: injections `L -> T` that preserve the relation of `kind`.
pub fn hom_set(kind: RelationKind, t: &OrbitObject, l: &OrbitObject) -> Vec<OrbitMorphism> {
    injections(l.points(), t.points())
        .into_iter()
        .filter(|w| extendable(kind, w))
        .map(|witness| OrbitMorphism {
            source: t.clone(),
            target: l.clone(),
            witness,
        })
        .collect()
}

/// All injections from `from` into `into`, in lexicographic order of images.
fn injections(from: &[u32], into: &[u32]) -> Vec<FinitePartialInjection> {
    injective_tuples(from.len(), into.len() as u32)
        .into_iter()
        .map(|tuple| {
            let pairs = from
                .iter()
                .zip(&tuple)
                .map(|(&s, &i)| (s, into[i as usize - 1]))
                .collect();
            FinitePartialInjection::new(pairs).expect("injective by construction")
        })
        .collect()
}

/// Counts `G/H_T -> G/H_L` inside `Sym([1..m])`: permutations `g` with
/// `g H_T g^-1 ⊆ H_L`, up to the coset of `H_L` they determine.
///
/// `H_T` is generated by the transpositions of points outside `T`, so `g` is
/// kept when each conjugate `g (a b) g^-1 = (g(a) g(b))` fixes `L` pointwise.
/// Kept elements in the same coset share the restriction of `g^-1` to `L`.
pub fn hom_count_bruteforce_sym(m: usize, t: &OrbitObject, l: &OrbitObject) -> Result<u64> {
    hom_count_bruteforce_sym_capped(m, t, l, DEFAULT_SYM_CAP)
}

pub fn hom_count_bruteforce_sym_capped(
    m: usize,
    t: &OrbitObject,
    l: &OrbitObject,
    cap: usize,
) -> Result<u64> {
    if m > cap {
        return Err(Error::BudgetExceeded(format!(
            "symmetric group on {m} points exceeds cap {cap}"
        )));
    }
    if (t.max().max(l.max()) as usize) > m {
        return Err(Error::ShapeError(format!(
            "points {:?} and {:?} do not fit in [1..{m}]",
            t.points(),
            l.points()
        )));
    }
    let outside: Vec<u32> = (1..=m as u32).filter(|p| !t.points.contains(p)).collect();
    let in_l = |p: u32| l.points.binary_search(&p).is_ok();
    let perms: Vec<Perm> = Perm::all(m).collect();
    let cosets: BTreeSet<Vec<u32>> = perms
        .par_iter()
        .filter(|g| {
            // (g(a) g(b)) fixes L iff neither image lies in L
            outside.len() < 2 || outside.iter().all(|&a| !in_l(g.apply(a)))
        })
        .map(|g| {
            let inv = g.inverse();
            l.points.iter().map(|&p| inv.apply(p)).collect::<Vec<u32>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(cosets.len() as u64)
}

/// Brute-force counts for `m` up to `m_max`, and where they settle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizationReport {
    pub kind: RelationKind,
    #[serde(rename = "T")]
    pub t: Vec<u32>,
    #[serde(rename = "L")]
    pub l: Vec<u32>,
    /// Count at `m_max`.
    pub count: u64,
    /// Least `m` from which the count stays constant up to `m_max`; `None` when
    /// the last two counts differ, so no stabilization has been observed.
    pub stabilized_at: Option<usize>,
    pub counts: BTreeMap<usize, u64>,
    /// Size of `hom_set` for `kind`.
    pub expected: u64,
}

impl StabilizationReport {
    pub fn matches(&self) -> bool {
        self.stabilized_at.is_some() && self.count == self.expected
    }
}

/// Runs [`hom_count_bruteforce_sym`] for every `m` from the least admissible
/// one to `m_max`.
pub fn hom_stabilization(t: &OrbitObject, l: &OrbitObject, m_max: usize) -> Result<StabilizationReport> {
    let m_min = (t.max().max(l.max()) as usize).max(1);
    if m_max < m_min {
        return Err(Error::ShapeError(format!(
            "m_max = {m_max} is below the largest point {m_min}"
        )));
    }
    let mut counts = BTreeMap::new();
    for m in m_min..=m_max {
        counts.insert(m, hom_count_bruteforce_sym(m, t, l)?);
    }
    let count = counts[&m_max];
    let mut stabilized_at = m_max;
    while stabilized_at > m_min && counts[&(stabilized_at - 1)] == count {
        stabilized_at -= 1;
    }
    Ok(StabilizationReport {
        kind: RelationKind::FullSymmetric,
        t: t.points.clone(),
        l: l.points.clone(),
        count,
        stabilized_at: (stabilized_at < m_max).then_some(stabilized_at),
        counts,
        expected: hom_set(RelationKind::FullSymmetric, t, l).len() as u64,
    })
}

/// Injections `[1..d] -> L`, written as tuples.
fn tuples_into(d: usize, l: &[u32]) -> Vec<Vec<u32>> {
    injective_tuples(d, l.len() as u32)
        .into_iter()
        .map(|tup| tup.iter().map(|&i| l[i as usize - 1]).collect())
        .collect()
}

/// Sections over `G/H_L` of the polynomial ring `A` on variables `x[a_1..a_d]`
/// indexed by `d`-tuples of distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheafSection {
    pub d: usize,
    #[serde(rename = "L")]
    pub l: Vec<u32>,
    pub m: u32,
    /// Variables of the fixed subring `A^{H_L}`: the injections `[1..d] -> L`.
    pub indeterminates: Vec<Vec<u32>>,
}

impl SheafSection {
    /// `|L| < d`: the fixed ring is the field of constants.
    pub fn constants_only(&self) -> bool {
        self.indeterminates.is_empty()
    }

    /// Positions of this section's variables among those of a larger one.
    pub fn restriction_into(&self, larger: &SheafSection) -> Result<Vec<usize>> {
        if self.d != larger.d {
            return Err(Error::ShapeError("sections of different rings".into()));
        }
        self.indeterminates
            .iter()
            .map(|v| {
                larger.indeterminates.iter().position(|w| w == v).ok_or_else(|| {
                    Error::ShapeError(format!("variable {v:?} is not a section over the larger set"))
                })
            })
            .collect()
    }
}

fn check_section_args(d: usize, l: &OrbitObject, m: u32) -> Result<()> {
    if m > DEFAULT_SECTION_CAP {
        return Err(Error::BudgetExceeded(format!(
            "truncation m = {m} exceeds cap {DEFAULT_SECTION_CAP}"
        )));
    }
    if l.max() > m {
        return Err(Error::ShapeError(format!(
            "points {:?} do not fit in [1..{m}]",
            l.points()
        )));
    }
    if d as u32 > m {
        return Err(Error::ShapeError(format!("tuples of length {d} need m >= {d}")));
    }
    Ok(())
}

pub fn sheaf_section(d: usize, l: &OrbitObject, m: u32) -> Result<SheafSection> {
    check_section_args(d, l, m)?;
    Ok(SheafSection {
        d,
        l: l.points.clone(),
        m,
        indeterminates: tuples_into(d, l.points()),
    })
}

/// Sections over `G/H_L` of the free `A`-module with basis `Inj(T, S)`, `|T| = dt`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeModuleSection {
    pub dt: usize,
    #[serde(rename = "L")]
    pub l: Vec<u32>,
    pub m: u32,
    /// Basis over the coefficient ring: the injections `[1..dt] -> L`.
    pub basis: Vec<Vec<u32>>,
    /// The coefficient ring `k[x_l : l in L]`.
    pub coefficients: SheafSection,
}

impl FreeModuleSection {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn free_module_section(dt: usize, l: &OrbitObject, m: u32) -> Result<FreeModuleSection> {
    check_section_args(dt, l, m)?;
    Ok(FreeModuleSection {
        dt,
        l: l.points.clone(),
        m,
        basis: tuples_into(dt, l.points()),
        coefficients: sheaf_section(1, l, m)?,
    })
}

/// A monomial in tuple-indexed variables: sorted `(tuple, exponent)` pairs.
type TupleMonomial = Vec<(Vec<u32>, u32)>;

/// A sampled element `sum c * monomial * e_basis`; the basis tuple is empty for ring elements.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Sample {
    terms: BTreeMap<(Vec<u32>, TupleMonomial), i64>,
}

impl Sample {
    fn act(&self, g: &Perm) -> Sample {
        let mut terms = BTreeMap::new();
        for ((basis, mono), c) in &self.terms {
            let b: Vec<u32> = basis.iter().map(|&p| g.apply(p)).collect();
            let mut mm: TupleMonomial = mono
                .iter()
                .map(|(v, e)| (v.iter().map(|&p| g.apply(p)).collect(), *e))
                .collect();
            mm.sort();
            *terms.entry((b, mm)).or_insert(0) += c;
        }
        terms.retain(|_, c| *c != 0);
        Sample { terms }
    }

    fn points(&self) -> BTreeSet<u32> {
        self.terms
            .keys()
            .flat_map(|(b, mono)| b.iter().chain(mono.iter().flat_map(|(v, _)| v.iter())))
            .copied()
            .collect()
    }
}

/// Outcome of sampling elements and comparing the two sides of the fixed-point test.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SectionValidation {
    pub samples: usize,
    /// Samples fixed by every generator of the truncated `H_L`.
    pub fixed: usize,
    /// Samples lying in the predicted section.
    pub predicted: usize,
    pub mismatches: usize,
}

impl SectionValidation {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

fn random_tuple<R: Rng>(rng: &mut R, len: usize, pool: &[u32]) -> Option<Vec<u32>> {
    if len > pool.len() {
        return None;
    }
    let mut pool = pool.to_vec();
    Some(
        (0..len)
            .map(|_| pool.swap_remove(rng.gen_range(0..pool.len())))
            .collect(),
    )
}

/// Up to two terms of degree at most two; half the samples only use points of `L`.
fn random_sample<R: Rng>(rng: &mut R, var_len: usize, basis_len: usize, l: &[u32], m: u32) -> Sample {
    let all: Vec<u32> = (1..=m).collect();
    let pool: &[u32] = if rng.gen_bool(0.5) { l } else { &all };
    let mut terms = BTreeMap::new();
    for _ in 0..rng.gen_range(1..=2) {
        let Some(basis) = random_tuple(rng, basis_len, pool) else {
            continue;
        };
        let mut mono: TupleMonomial = Vec::new();
        for _ in 0..rng.gen_range(0..=2) {
            if let Some(v) = random_tuple(rng, var_len, pool) {
                match mono.iter_mut().find(|(w, _)| *w == v) {
                    Some((_, e)) => *e += 1,
                    None => mono.push((v, 1)),
                }
            }
        }
        mono.sort();
        let c = rng.gen_range(1..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
        *terms.entry((basis, mono)).or_insert(0) += c;
    }
    terms.retain(|_, c| *c != 0);
    Sample { terms }
}

fn validate(var_len: usize, basis_len: usize, l: &OrbitObject, m: u32, samples: usize, seed: u64) -> Result<SectionValidation> {
    if (m as usize) < l.len() + 3 {
        return Err(Error::Unsupported(format!(
            "fixed points of the truncated stabilizer only match sections once m >= |L| + 3 (m = {m}, |L| = {})",
            l.len()
        )));
    }
    let outside: Vec<u32> = (1..=m).filter(|p| !l.points.contains(p)).collect();
    let gens: Vec<Perm> = outside
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| outside[i + 1..].iter().map(move |&b| (a, b)))
        .map(|(a, b)| Perm::transposition(m as usize, a, b))
        .collect();
    let mut rng = corpus::rng(seed);
    let mut report = SectionValidation::default();
    for _ in 0..samples {
        let s = random_sample(&mut rng, var_len, basis_len, l.points(), m);
        let fixed = gens.iter().all(|g| s.act(g) == s);
        let predicted = s.points().iter().all(|p| l.points.contains(p));
        report.samples += 1;
        report.fixed += fixed as usize;
        report.predicted += predicted as usize;
        report.mismatches += (fixed != predicted) as usize;
    }
    Ok(report)
}

/// Samples polynomials in the `d`-tuple variables and checks that those fixed by
/// the truncated `H_L` are exactly those in the variables of [`sheaf_section`].
pub fn validate_sheaf_section(d: usize, l: &OrbitObject, m: u32, samples: usize, seed: u64) -> Result<SectionValidation> {
    check_section_args(d, l, m)?;
    validate(d, 0, l, m, samples, seed)
}

/// Samples module elements and checks that those fixed by the truncated `H_L`
/// are exactly the combinations of [`free_module_section`] basis elements with
/// coefficients in `k[x_L]`.
pub fn validate_free_module_section(dt: usize, l: &OrbitObject, m: u32, samples: usize, seed: u64) -> Result<SectionValidation> {
    check_section_args(dt, l, m)?;
    validate(1, dt, l, m, samples, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{binomial, falling_factorial};

    fn obj(p: &[u32]) -> OrbitObject {
        OrbitObject::new(p.iter().copied()).unwrap()
    }

    #[test]
    fn hom_set_examples() {
        assert_eq!(hom_set(RelationKind::FullSymmetric, &obj(&[1, 2]), &obj(&[5])).len(), 2);
        assert_eq!(hom_set(RelationKind::LinearOrder, &obj(&[1, 2, 3]), &obj(&[4, 5])).len(), 3);
        for kind in RelationKind::ALL {
            assert!(hom_set(kind, &obj(&[1]), &obj(&[2, 3])).is_empty());
        }
    }

    #[test]
    fn hom_set_counts() {
        for t in 0..=4usize {
            for l in 0..=4usize {
                let tt = obj(&(1..=t as u32).collect::<Vec<_>>());
                let ll = obj(&(11..11 + l as u32).collect::<Vec<_>>());
                let full = hom_set(RelationKind::FullSymmetric, &tt, &ll).len() as u64;
                let lin = hom_set(RelationKind::LinearOrder, &tt, &ll).len() as u64;
                assert_eq!(full, if l <= t { falling_factorial(t, l) } else { 0 });
                assert_eq!(lin, binomial(t, l));
            }
        }
    }

    #[test]
    fn composition() {
        let a = obj(&[1, 2, 3]);
        let b = obj(&[4, 5]);
        let c = obj(&[6]);
        for f in hom_set(RelationKind::LinearOrder, &a, &b) {
            assert_eq!(OrbitMorphism::identity(&a).then(&f).unwrap(), f);
            assert_eq!(f.then(&OrbitMorphism::identity(&b)).unwrap(), f);
            for g in hom_set(RelationKind::LinearOrder, &b, &c) {
                let h = f.then(&g).unwrap();
                assert_eq!(h.source, a);
                assert_eq!(h.target, c);
                assert_eq!(h.witness.apply(6), f.witness.apply(g.witness.apply(6).unwrap()));
            }
        }
        assert!(OrbitMorphism::identity(&a).then(&OrbitMorphism::identity(&b)).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert_eq!(hom_count_bruteforce_sym(6, &obj(&[1, 2]), &obj(&[3])).unwrap(), 2);
        assert_eq!(hom_count_bruteforce_sym(7, &obj(&[1, 2, 3]), &obj(&[4, 5])).unwrap(), 6);
        assert_eq!(hom_count_bruteforce_sym(6, &obj(&[1]), &obj(&[2, 3])).unwrap(), 0);
        assert!(matches!(
            hom_count_bruteforce_sym(9, &obj(&[1]), &obj(&[2])),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn small_truncations_overcount() {
        // with at most one point outside T the stabilizer is trivial
        let r = hom_stabilization(&obj(&[1, 2]), &obj(&[3]), 6).unwrap();
        assert_eq!(r.counts[&3], 3);
        assert_eq!(r.count, 2);
        assert_eq!(r.stabilized_at, Some(4));
        assert!(r.matches());
    }

    #[test]
    fn section_examples() {
        let s = sheaf_section(1, &obj(&[1, 2]), 6).unwrap();
        assert_eq!(s.indeterminates, vec![vec![1], vec![2]]);
        assert_eq!(sheaf_section(2, &obj(&[1, 2, 3]), 6).unwrap().indeterminates.len(), 6);
        assert!(sheaf_section(2, &obj(&[1]), 6).unwrap().constants_only());
        let f = free_module_section(1, &obj(&[1, 2]), 6).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.coefficients.indeterminates.len(), 2);
        assert_eq!(free_module_section(2, &obj(&[1]), 6).unwrap().rank(), 0);
        assert_eq!(free_module_section(0, &obj(&[1, 2]), 6).unwrap().rank(), 1);
    }

    #[test]
    fn restriction_is_inclusion() {
        let small = sheaf_section(2, &obj(&[1, 2]), 6).unwrap();
        let large = sheaf_section(2, &obj(&[1, 2, 3]), 6).unwrap();
        let idx = small.restriction_into(&large).unwrap();
        assert_eq!(idx.len(), 2);
        assert!(idx.iter().all(|&i| i < 6));
        assert!(large.restriction_into(&small).is_err());
    }

    #[test]
    fn validation() {
        for d in 1..=2 {
            for l in [&[][..], &[2], &[1, 3], &[1, 2, 3]] {
                let l = obj(l);
                let r = validate_sheaf_section(d, &l, 6, 100, 5).unwrap();
                assert!(r.passed(), "{r:?}");
                assert!(r.fixed > 0 && r.fixed < r.samples);
                let r = validate_free_module_section(d, &l, 6, 100, 5).unwrap();
                assert!(r.passed(), "{r:?}");
            }
        }
        assert!(matches!(
            validate_sheaf_section(1, &obj(&[1, 2, 3, 4]), 6, 10, 0),
            Err(Error::Unsupported(_))
        ));
    }
}
