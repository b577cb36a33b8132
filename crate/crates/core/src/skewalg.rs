//! The skew group ring `A·Sym([1..m])` over row-column polynomials, and the
//! finite-support witness for discreteness of the column action.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::corpus::{self, CorpusParams};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::perm::Perm;
use crate::poly::Polynomial;
use crate::symmetry::TruncationContext;

/// `g · p`: relabels column `s` as `g(s)`.
pub fn act<F: Field>(g: &Perm, p: &Polynomial<F>) -> Polynomial<F> {
    p.map_columns(|c| g.apply(c))
}

/// A finite sum `Σ a_g g` with `a_g` polynomials in columns `[1..m]`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewElement<F: Field = Rational> {
    truncation: TruncationContext,
    terms: BTreeMap<Perm, Polynomial<F>>,
}

impl<F: Field> SkewElement<F> {
    pub fn zero(truncation: TruncationContext) -> Self {
        SkewElement {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: TruncationContext) -> Self {
        Self::monomial(truncation, Polynomial::one(), Perm::identity(truncation.m as usize))
            .expect("constants fit every truncation")
    }

    /// The single term `a g`.
    pub fn monomial(truncation: TruncationContext, a: Polynomial<F>, g: Perm) -> Result<Self> {
        Self::from_terms(truncation, [(a, g)])
    }

    pub fn from_terms(
        truncation: TruncationContext,
        terms: impl IntoIterator<Item = (Polynomial<F>, Perm)>,
    ) -> Result<Self> {
        let mut out = Self::zero(truncation);
        for (a, g) in terms {
            if g.degree() != truncation.m as usize {
                return Err(Error::ShapeError(format!(
                    "permutation of degree {} in truncation m = {}",
                    g.degree(),
                    truncation.m
                )));
            }
            if !truncation.contains(&a) {
                return Err(Error::ShapeError(format!(
                    "coefficient {a} uses columns beyond m = {}",
                    truncation.m
                )));
            }
            out.add_term(a, g);
        }
        Ok(out)
    }

    fn add_term(&mut self, a: Polynomial<F>, g: Perm) {
        if a.is_zero() {
            return;
        }
        let slot = self.terms.entry(g).or_default();
        *slot = &*slot + &a;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn truncation(&self) -> TruncationContext {
        self.truncation
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Perm, &Polynomial<F>)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.truncation != other.truncation {
            return Err(Error::ShapeError(format!(
                "truncations differ: m = {} and m = {}",
                self.truncation.m, other.truncation.m
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (g, a) in &other.terms {
            out.add_term(a.clone(), g.clone());
        }
        Ok(out)
    }
}

/// Bilinear extension of `(a g)(b h) = a (g·b) gh`.
pub fn skew_mul<F: Field>(u: &SkewElement<F>, v: &SkewElement<F>) -> Result<SkewElement<F>> {
    u.check_same(v)?;
    let mut out = SkewElement::zero(u.truncation);
    for (g, a) in &u.terms {
        for (h, b) in &v.terms {
            out.add_term(a * &act(g, b), g.compose(h));
        }
    }
    Ok(out)
}

impl<F: Field> fmt::Display for SkewElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({a})*{g:?}")?;
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for SkewElement<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Columns occurring in `p`; their pointwise stabilizer fixes `p`.
pub fn minimal_support<F: Field>(p: &Polynomial<F>) -> BTreeSet<u32> {
    p.columns().into_iter().collect()
}

/// Checks that each transposition of `[1..m]` fixing `minimal_support(p)` pointwise fixes `p`.
pub fn support_is_stabilized<F: Field>(p: &Polynomial<F>, m: u32) -> Result<bool> {
    TruncationContext::new(m)?;
    if p.max_col() > m {
        return Err(Error::ShapeError(format!("{p} uses columns beyond m = {m}")));
    }
    let support = minimal_support(p);
    let free: Vec<u32> = (1..=m).filter(|c| !support.contains(c)).collect();
    Ok(free.iter().enumerate().all(|(i, &a)| {
        free[i + 1..]
            .iter()
            .all(|&b| act(&Perm::transposition(m as usize, a, b), p) == *p)
    }))
}

fn random_perm<R: Rng>(rng: &mut R, m: usize) -> Perm {
    let mut images: Vec<u32> = (1..=m as u32).collect();
    for i in (1..m).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    Perm::from_images(images).expect("shuffled identity")
}

/// A random element with up to `max_terms` group elements and small coefficients.
pub fn random_skew_element<R: Rng>(
    rng: &mut R,
    m: u32,
    rows: u32,
    max_terms: usize,
    params: &CorpusParams,
) -> Result<SkewElement<Rational>> {
    let truncation = TruncationContext::new(m)?;
    let terms: Vec<_> = (0..rng.gen_range(1..=max_terms))
        .map(|_| {
            (
                corpus::random_polynomial(rng, rows, m, params),
                random_perm(rng, m as usize),
            )
        })
        .collect();
    SkewElement::from_terms(truncation, terms)
}

/// Results of sampling the ring axioms and the support witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SkewCheckReport {
    pub m: u32,
    pub triples: usize,
    pub associativity_failures: usize,
    pub distributivity_failures: usize,
    pub identity_failures: usize,
    pub action_failures: usize,
    pub support_m: u32,
    pub polynomials: usize,
    pub support_failures: usize,
}

impl SkewCheckReport {
    pub fn passed(&self) -> bool {
        self.associativity_failures == 0
            && self.distributivity_failures == 0
            && self.identity_failures == 0
            && self.action_failures == 0
            && self.support_failures == 0
    }
}

fn small_params() -> CorpusParams {
    CorpusParams {
        max_terms: 2,
        max_degree: 2,
        ..CorpusParams::default()
    }
}

/// Samples `samples` triples at horizon `m` and `samples` polynomials at `support_m`.
pub fn skew_check(m: u32, support_m: u32, samples: usize, seed: u64) -> Result<SkewCheckReport> {
    let params = small_params();
    let mut rng = corpus::rng(seed);
    let one = SkewElement::one(TruncationContext::new(m)?);
    let mut report = SkewCheckReport {
        m,
        triples: samples,
        support_m,
        polynomials: samples,
        ..Default::default()
    };
    for _ in 0..samples {
        let u = random_skew_element(&mut rng, m, 2, 2, &params)?;
        let v = random_skew_element(&mut rng, m, 2, 2, &params)?;
        let w = random_skew_element(&mut rng, m, 2, 2, &params)?;
        let left = skew_mul(&skew_mul(&u, &v)?, &w)?;
        let right = skew_mul(&u, &skew_mul(&v, &w)?)?;
        report.associativity_failures += (left != right) as usize;
        let dl = skew_mul(&u, &v.add(&w)?)?;
        let dr = skew_mul(&u, &v)?.add(&skew_mul(&u, &w)?)?;
        let el = skew_mul(&u.add(&v)?, &w)?;
        let er = skew_mul(&u, &w)?.add(&skew_mul(&v, &w)?)?;
        report.distributivity_failures += (dl != dr || el != er) as usize;
        report.identity_failures +=
            (skew_mul(&one, &u)? != u || skew_mul(&u, &one)? != u) as usize;
        let g = random_perm(&mut rng, m as usize);
        let b: Polynomial<Rational> = corpus::random_polynomial(&mut rng, 2, m, &params);
        let t = one.truncation();
        let lhs = skew_mul(
            &SkewElement::monomial(t, Polynomial::one(), g.clone())?,
            &SkewElement::monomial(t, b.clone(), Perm::identity(m as usize))?,
        )?;
        report.action_failures += (lhs != SkewElement::monomial(t, act(&g, &b), g)?) as usize;
    }
    for _ in 0..samples {
        let p: Polynomial<Rational> = corpus::random_polynomial(&mut rng, 2, support_m, &params);
        report.support_failures += !support_is_stabilized(&p, support_m)? as usize;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial<Rational> {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn multiplication_example() {
        let t = TruncationContext::new(3).unwrap();
        let g = Perm::transposition(3, 1, 2);
        let u = SkewElement::monomial(t, p("x[1,1]"), g.clone()).unwrap();
        let v = SkewElement::monomial(t, p("x[1,1]"), Perm::identity(3)).unwrap();
        let expected = SkewElement::monomial(t, p("x[1,1]*x[1,2]"), g).unwrap();
        assert_eq!(skew_mul(&u, &v).unwrap(), expected);
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let t = TruncationContext::new(2).unwrap();
        let e = Perm::identity(2);
        let u = SkewElement::from_terms(t, [(p("x[1,1]"), e.clone()), (p("-x[1,1]"), e.clone())]).unwrap();
        assert!(u.is_zero());
        let v = SkewElement::from_terms(t, [(p("x[1,1]"), e.clone()), (p("x[1,2]"), e)]).unwrap();
        assert_eq!(v.len(), 1);
    }

    #[test]
    fn mismatched_truncations() {
        let a = SkewElement::<Rational>::one(TruncationContext::new(3).unwrap());
        let b = SkewElement::<Rational>::one(TruncationContext::new(4).unwrap());
        assert!(matches!(skew_mul(&a, &b), Err(Error::ShapeError(_))));
        assert!(SkewElement::monomial(TruncationContext::new(2).unwrap(), p("x[1,3]"), Perm::identity(2)).is_err());
        assert!(SkewElement::monomial(TruncationContext::new(2).unwrap(), p("1"), Perm::identity(3)).is_err());
    }

    #[test]
    fn supports() {
        assert_eq!(minimal_support(&p("x[1,3] + x[1,5]^2")), BTreeSet::from([3, 5]));
        assert!(minimal_support(&p("7")).is_empty());
        assert!(support_is_stabilized(&p("x[1,3] + x[2,5]^2"), 6).unwrap());
    }

    #[test]
    fn sampled_axioms() {
        let r = skew_check(4, 6, 30, 1).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
