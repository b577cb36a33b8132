use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use super::ideal::{EquivariantIdeal, GroebnerBasis};
use super::divides::{inc_embeddings, inc_witness};
use super::reduce::{inc_reduce, inc_top_reduce, Reducer};
use super::translate::sym_to_inc_generators;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, Polynomial, TermOrder};
use crate::symmetry::SymmetryType;

/// Default number of S-polynomials a completion may reduce.
pub const DEFAULT_SPAIR_BUDGET: usize = 10_000;

/// Resource limits for [`eq_buchberger`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// S-polynomials reduced, after the coprime-leading-term filter.
    pub spairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            spairs: DEFAULT_SPAIR_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(spairs: usize) -> Self {
        Budget { spairs }
    }
}

/// Counters from one completion run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompletionStats {
    pub element_pairs: usize,
    pub spairs_reduced: usize,
    pub spairs_skipped: usize,
    pub elements_adjoined: usize,
    pub max_width: usize,
}

/// Jointly covering pairs of increasing maps `[1..a] -> [1..k]`, `[1..b] -> [1..k]`,
/// restricted to `fcols` and `gcols`. Every relative position of an image of `f`
/// and an image of `g` is an increasing map applied to one of these.
pub(crate) fn interleavings(
    fcols: &[u32],
    a: u32,
    gcols: &[u32],
    b: u32,
) -> Vec<(Vec<u32>, Vec<u32>)> {
    fn rec(
        i: u32,
        j: u32,
        pos: u32,
        (a, b): (u32, u32),
        fmap: &mut Vec<u32>,
        gmap: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32], &[u32]),
    ) {
        if i == a && j == b {
            visit(fmap, gmap);
            return;
        }
        if i < a {
            fmap.push(pos);
            rec(i + 1, j, pos + 1, (a, b), fmap, gmap, visit);
            fmap.pop();
        }
        if j < b {
            gmap.push(pos);
            rec(i, j + 1, pos + 1, (a, b), fmap, gmap, visit);
            gmap.pop();
        }
        if i < a && j < b {
            fmap.push(pos);
            gmap.push(pos);
            rec(i + 1, j + 1, pos + 1, (a, b), fmap, gmap, visit);
            fmap.pop();
            gmap.pop();
        }
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut visit = |fm: &[u32], gm: &[u32]| {
        let fp: Vec<u32> = fcols.iter().map(|&c| fm[c as usize - 1]).collect();
        let gp: Vec<u32> = gcols.iter().map(|&c| gm[c as usize - 1]).collect();
        if seen.insert((fp.clone(), gp.clone())) {
            out.push((fp, gp));
        }
    };
    rec(0, 0, 1, (a, b), &mut Vec::new(), &mut Vec::new(), &mut visit);
    out
}

fn place<F: Field>(p: &Polynomial<F>, cols: &[u32], targets: &[u32]) -> Polynomial<F> {
    p.map_columns(|c| targets[cols.binary_search(&c).unwrap()])
}

fn s_poly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading_term().unwrap();
    let (gm, gc) = g.leading_term().unwrap();
    let l = fm.lcm(gm);
    let mut s = f.mul_monomial(&fm.quotient_of(&l).unwrap()).scale(&fc.inv());
    s.add_scaled(&-gc.inv(), &gm.quotient_of(&l).unwrap(), g);
    s
}

/// Pending work, ordered by sugar degree and then by lcm.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Task {
    sugar: u32,
    lcm: Monomial,
    kind: TaskKind,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum TaskKind {
    /// S-polynomial of `basis[i]` placed at `fp` and `basis[j]` placed at `gp`.
    Pair {
        i: usize,
        j: usize,
        fp: Vec<u32>,
        gp: Vec<u32>,
    },
    /// Reduce an element retired by a newer leading monomial.
    Retired(usize),
}

struct Completion<F: Field> {
    basis: Vec<Polynomial<F>>,
    alive: Vec<bool>,
    /// Degree bound inherited from the S-pair that produced each element.
    sugar: Vec<u32>,
    queue: BinaryHeap<Reverse<Task>>,
    stats: CompletionStats,
}

impl<F: Field> Completion<F> {
    fn live(&self) -> impl Iterator<Item = &Polynomial<F>> + '_ {
        self.basis.iter().zip(&self.alive).filter(|(_, &a)| a).map(|(g, _)| g)
    }

    fn placed_lm(&self, k: usize, targets: &[u32]) -> Monomial {
        let g = &self.basis[k];
        let cols = g.columns();
        g.lm().unwrap().map_columns(|c| targets[cols.binary_search(&c).unwrap()])
    }

    /// Placements of `basis[i]` and `basis[j]` whose leading monomials overlap.
    fn queue_pairs(&mut self, i: usize, j: usize) {
        let (f, g) = (&self.basis[i], &self.basis[j]);
        let (fcols, gcols) = (f.columns(), g.columns());
        let mut seen = HashSet::new();
        for (fp, gp) in interleavings(&fcols, f.max_col(), &gcols, g.max_col()) {
            if i == j && (fp == gp || !seen.insert((gp.clone(), fp.clone()))) {
                continue;
            }
            seen.insert((fp.clone(), gp.clone()));
            let a = self.placed_lm(i, &fp);
            let b = self.placed_lm(j, &gp);
            if a.is_coprime(&b) {
                self.stats.spairs_skipped += 1;
                continue;
            }
            let lcm = a.lcm(&b);
            let sugar = (self.sugar[i] + lcm.degree() - a.degree())
                .max(self.sugar[j] + lcm.degree() - b.degree());
            self.queue.push(Reverse(Task {
                sugar,
                lcm,
                kind: TaskKind::Pair { i, j, fp, gp },
            }));
        }
    }

    /// Whether some image of a live leading monomial divides the pair's lcm
    /// while splitting it into two pairs of strictly smaller lcm.
    fn chain_covered(&self, lcm: &Monomial, a: &Monomial, b: &Monomial) -> bool {
        self.live().any(|h| {
            let hlm = h.lm().unwrap();
            let hcols = hlm.columns();
            inc_embeddings(hlm, lcm).into_iter().any(|targets| {
                let t = hlm.map_columns(|c| targets[hcols.binary_search(&c).unwrap()]);
                a.lcm(&t) != *lcm && t.lcm(b) != *lcm
            })
        })
    }

    fn reduce(&self, f: &Polynomial<F>) -> Polynomial<F> {
        let reducers: Vec<_> = self.live().filter_map(Reducer::new).collect();
        inc_top_reduce(f, &reducers)
    }

    /// Adjoins the remainder of `h`. Live elements whose leading monomial it
    /// divides are retired and queued for reduction at their own sugar.
    fn adjoin(&mut self, h: &Polynomial<F>, sugar: u32) {
        let h = self.reduce(h);
        if h.is_zero() {
            return;
        }
        let h = h.monic();
        let hlm = h.lm().unwrap().clone();
        for k in 0..self.basis.len() {
            if self.alive[k] && inc_witness(&hlm, self.basis[k].lm().unwrap()).is_some() {
                self.alive[k] = false;
                self.queue.push(Reverse(Task {
                    sugar: self.sugar[k],
                    lcm: self.basis[k].lm().unwrap().clone(),
                    kind: TaskKind::Retired(k),
                }));
            }
        }
        self.stats.elements_adjoined += 1;
        self.stats.max_width = self.stats.max_width.max(h.width());
        self.sugar.push(sugar.max(h.total_degree()));
        self.basis.push(h);
        self.alive.push(true);
        let k = self.basis.len() - 1;
        for i in 0..=k {
            if self.alive[i] {
                self.stats.element_pairs += 1;
                self.queue_pairs(i, k);
            }
        }
    }

    /// The polynomial a task asks to reduce, unless it is obsolete or covered.
    fn prepare(&mut self, task: &Task) -> Option<Polynomial<F>> {
        match &task.kind {
            TaskKind::Retired(k) => Some(self.basis[*k].clone()),
            TaskKind::Pair { i, j, fp, gp } => {
                if !self.alive[*i] || !self.alive[*j] {
                    return None;
                }
                let a = self.placed_lm(*i, fp);
                let b = self.placed_lm(*j, gp);
                if self.chain_covered(&task.lcm, &a, &b) {
                    self.stats.spairs_skipped += 1;
                    return None;
                }
                self.stats.spairs_reduced += 1;
                let (f, g) = (&self.basis[*i], &self.basis[*j]);
                Some(s_poly(
                    &place(f, &f.columns(), fp),
                    &place(g, &g.columns(), gp),
                ))
            }
        }
    }
}

fn inc_generators<F: Field>(ideal: &EquivariantIdeal<F>) -> Result<Vec<Polynomial<F>>> {
    match ideal.symmetry {
        SymmetryType::IncColumns { .. } => Ok(ideal.generators().to_vec()),
        SymmetryType::SymColumns { rows } => {
            let mut out = Vec::new();
            for g in ideal.generators() {
                for h in sym_to_inc_generators(g, rows)? {
                    if !out.contains(&h) {
                        out.push(h);
                    }
                }
            }
            Ok(out)
        }
        SymmetryType::PairSym => Err(Error::Unsupported(
            "the pair action has no completion engine".into(),
        )),
    }
}

/// Equivariant Groebner basis of `ideal`.
///
/// Sym ideals are completed as the increasing-map ideal of
/// [`sym_to_inc_generators`] images, and the basis lists those generators.
pub fn eq_buchberger<F: Field>(
    ideal: &EquivariantIdeal<F>,
    order: TermOrder,
    budget: Budget,
) -> Result<GroebnerBasis<F>> {
    eq_buchberger_with_stats(ideal, order, budget).map(|(gb, _)| gb)
}

/// Tasks of equal sugar are reduced together in batches of at most this size.
const BATCH: usize = 16;

pub fn eq_buchberger_with_stats<F: Field>(
    ideal: &EquivariantIdeal<F>,
    order: TermOrder,
    budget: Budget,
) -> Result<(GroebnerBasis<F>, CompletionStats)> {
    let mut run = Completion {
        basis: Vec::new(),
        alive: Vec::new(),
        sugar: Vec::new(),
        queue: BinaryHeap::new(),
        stats: CompletionStats::default(),
    };
    for g in inc_generators(ideal)? {
        run.adjoin(&g, g.total_degree());
    }
    while let Some(Reverse(first)) = run.queue.pop() {
        let sugar = first.sugar;
        let mut batch = Vec::new();
        let mut next = Some(first);
        while let Some(task) = next.take() {
            if let Some(s) = run.prepare(&task) {
                batch.push(s);
            }
            if batch.len() < BATCH
                && run.queue.peek().is_some_and(|Reverse(t)| t.sugar == sugar)
            {
                next = run.queue.pop().map(|Reverse(t)| t);
            }
        }
        if run.stats.spairs_reduced > budget.spairs {
            return Err(Error::BudgetExceeded(format!(
                "S-pair budget of {} exhausted with {} basis elements",
                budget.spairs,
                run.live().count()
            )));
        }
        let remainders: Vec<Polynomial<F>> = batch
            .par_iter()
            .map(|s| run.reduce(s))
            .filter(|r| !r.is_zero())
            .collect();
        for r in remainders {
            run.adjoin(&r, sugar);
        }
    }
    let elements = interreduce_inc(run.live().cloned().collect());
    let mut stats = run.stats;
    stats.max_width = elements.iter().map(|g| g.width()).max().unwrap_or(0);
    Ok((
        GroebnerBasis {
            symmetry: ideal.symmetry,
            order,
            elements,
        },
        stats,
    ))
}

/// Drops elements whose leading monomial is an increasing-map multiple of an
/// earlier one, tail-reduces the rest, makes them monic and sorts them.
pub(crate) fn interreduce_inc<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = basis.into_iter().filter(|g| !g.is_zero()).collect();
    basis.sort_by(|a, b| a.lm().cmp(&b.lm()));
    basis.dedup_by(|a, b| a.lm() == b.lm());
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for g in basis {
        let lm = g.lm().unwrap();
        if !minimal
            .iter()
            .any(|h| inc_witness(h.lm().unwrap(), lm).is_some())
        {
            minimal.push(g);
        }
    }
    let mut out: Vec<Polynomial<F>> = (0..minimal.len())
        .into_par_iter()
        .map(|i| {
            let (lm, lc) = minimal[i].leading_term().unwrap();
            let mut tail = minimal[i].clone();
            tail.remove_leading();
            let reducers: Vec<_> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .filter_map(|(_, h)| Reducer::new(h))
                .collect();
            let mut g = inc_reduce(&tail, &reducers);
            g.add_term(lc.clone(), lm.clone());
            g.monic()
        })
        .collect();
    out.sort_by(|a, b| a.lm().cmp(&b.lm()));
    out
}

/// Whether `f` lies in the ideal whose basis is `gb`.
pub fn eq_member<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Result<bool> {
    Ok(eq_remainder(f, gb)?.is_zero())
}

/// Normal form of `f` modulo the ideal whose basis is `gb`.
pub fn eq_remainder<F: Field>(f: &Polynomial<F>, gb: &GroebnerBasis<F>) -> Result<Polynomial<F>> {
    gb.symmetry.check_poly(f)?;
    if gb.symmetry == SymmetryType::PairSym {
        return Err(Error::Unsupported(
            "the pair action has no completion engine".into(),
        ));
    }
    let reducers: Vec<_> = gb.elements.iter().filter_map(Reducer::new).collect();
    Ok(inc_reduce(f, &reducers))
}
