//! One test per acceptance criterion. Each prints a `PASS`/`FAIL` line before asserting.

use std::time::{Duration, Instant};

use rand::Rng;

use equinoether::corpus::{self, inc_corpus, random_member, random_polynomial, sym_corpus, CorpusParams};
use equinoether::equivariant::{
    chain_analyze, diagonal_chain, eq_buchberger, eq_member, Budget, ChainReport,
};
use equinoether::orbitcat::{
    free_module_section, hom_set, hom_stabilization, sheaf_section, validate_free_module_section,
    validate_sheaf_section, OrbitObject,
};
use equinoether::perm::{binomial, factorial, falling_factorial};
use equinoether::poly::{buchberger_classical, member_classical, orbit_expand};
use equinoether::relations::growth;
use equinoether::skewalg::skew_check;
use equinoether::{Monomial, Polynomial, RelationKind, SymmetryType, TermOrder, TruncationContext};

fn verdict(name: &str, ok: bool, detail: String) {
    println!("{} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "{name}: {detail}");
}

fn corpus_params() -> CorpusParams {
    CorpusParams {
        max_terms: 2,
        ..CorpusParams::default()
    }
}

fn subsets(n: u32) -> Vec<OrbitObject> {
    (0u32..1 << n)
        .map(|mask| OrbitObject::new((1..=n).filter(|i| mask >> (i - 1) & 1 == 1)).unwrap())
        .collect()
}

#[test]
fn growth_tables() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for kind in RelationKind::ALL {
        let table = growth(kind, 6).unwrap();
        for (&n, row) in &table.rows {
            let f = factorial(n);
            let expected = match kind {
                RelationKind::FullSymmetric => 1,
                RelationKind::LinearOrder => f,
                RelationKind::Betweenness => (f / 2).max(1),
                RelationKind::CyclicOrder => factorial(n - 1),
                RelationKind::Separation if n >= 3 => f / (2 * n as u64),
                RelationKind::Separation => 1,
            };
            if row.subset_orbits != 1 || row.tuple_orbits != expected {
                bad.push(format!("{} n={n}: {row:?}, expected {expected}", kind.name()));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "growth tables match closed forms for n <= 6",
        bad.is_empty() && elapsed < Duration::from_secs(10),
        format!("{bad:?} in {elapsed:?}"),
    );
}

#[test]
fn membership_agrees_with_truncated_oracle() {
    let start = Instant::now();
    let params = corpus_params();
    let ideals = inc_corpus(2024, 100, &params);
    let mut rng = corpus::rng(99);
    let (mut queries, mut members, mut disagreements) = (0, 0, Vec::new());
    let m8 = TruncationContext::new(8).unwrap();
    for (k, ideal) in ideals.iter().enumerate() {
        let gb = eq_buchberger(ideal, TermOrder::LexColMajor, Budget::default()).unwrap();
        let mut orbit = Vec::new();
        for g in ideal.generators() {
            orbit.extend(orbit_expand(g, ideal.symmetry, m8).unwrap());
        }
        let classical = buchberger_classical(&orbit, TermOrder::LexColMajor);
        let rows = ideal.symmetry.rows().unwrap();
        for q in 0..20 {
            let f: Polynomial = if q % 2 == 0 {
                random_member(&mut rng, ideal, 4, &params)
            } else {
                random_polynomial(&mut rng, rows, 4, &params)
            };
            let eq = eq_member(&f, &gb).unwrap();
            let cl = member_classical(&f, &classical, TermOrder::LexColMajor);
            queries += 1;
            members += eq as usize;
            if eq != cl {
                disagreements.push(format!("ideal {k}: {f} eq={eq} classical={cl}"));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "equivariant membership matches classical membership at m = 8",
        disagreements.is_empty() && elapsed < Duration::from_secs(300),
        format!(
            "{queries} queries, {members} members, {} disagreements {:?} in {elapsed:?}",
            disagreements.len(),
            disagreements.iter().take(5).collect::<Vec<_>>()
        ),
    );
}

#[test]
fn completion_terminates_and_is_idempotent() {
    let params = corpus_params();
    let mut failures = Vec::new();
    let mut total = 0;
    for (label, ideals) in [("inc", inc_corpus(2024, 100, &params)), ("sym", sym_corpus(77, 100, &params))] {
        for (k, ideal) in ideals.iter().enumerate() {
            total += 1;
            match eq_buchberger(ideal, TermOrder::LexColMajor, Budget::default()) {
                Ok(gb) => {
                    let again = eq_buchberger(&gb.to_ideal(), TermOrder::LexColMajor, Budget::default());
                    match again {
                        Ok(again) if again == gb => {}
                        Ok(_) => failures.push(format!("{label} {k}: not idempotent")),
                        Err(e) => failures.push(format!("{label} {k}: rerun failed: {e}")),
                    }
                }
                Err(e) => failures.push(format!("{label} {k}: {e}")),
            }
        }
    }
    verdict(
        "completion terminates within the default budget and is idempotent",
        failures.is_empty(),
        format!("{total} ideals, failures {failures:?}"),
    );
}

#[test]
fn pair_diagonal_chain_grows() {
    let start = Instant::now();
    let stages = diagonal_chain::<equinoether::Rational>(4);
    let report = chain_analyze(SymmetryType::PairSym, &stages, 4).unwrap();
    let elapsed = start.elapsed();
    let certified = report.witnesses().len() == 3
        && report.witnesses().iter().all(|w| !w.certificates.is_empty());
    let ok = matches!(report, ChainReport::NoStabilizationWithinHorizon { .. })
        && certified
        && elapsed < Duration::from_secs(30);
    verdict(
        "pair diagonal chain strictly increasing through stage 4",
        ok,
        format!("report {}", describe(&report)),
    );
}

fn describe(report: &ChainReport) -> String {
    match report {
        ChainReport::Stabilized { stage, .. } => format!("stabilized at stage {stage}"),
        ChainReport::NoStabilizationWithinHorizon { horizon, witnesses } => {
            format!("no stabilization within {horizon} ({} witnesses)", witnesses.len())
        }
    }
}

#[test]
fn orbit_category_counts() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let objects: Vec<OrbitObject> = subsets(4).into_iter().filter(|o| o.len() <= 3).collect();
    for t in &objects {
        for l in &objects {
            let bound = t.len() + l.len() + 2;
            let report = hom_stabilization(t, l, 8).unwrap();
            let fi = falling_factorial(t.len(), l.len());
            let settled = (bound..=8).all(|m| report.counts.get(&m).is_none_or(|&c| c == fi));
            let oi = hom_set(RelationKind::LinearOrder, t, l).len() as u64;
            if !settled || report.count != fi || report.expected != fi || oi != binomial(t.len(), l.len()) {
                bad.push(format!("T={:?} L={:?}: {:?} oi={oi}", t.points(), l.points(), report.counts));
            }
        }
    }
    let elapsed = start.elapsed();
    verdict(
        "brute-force hom counts stabilize to injection counts",
        bad.is_empty() && elapsed < Duration::from_secs(60),
        format!("{} pairs, mismatches {bad:?} in {elapsed:?}", objects.len() * objects.len()),
    );
}

#[test]
fn sections_match_fixed_points() {
    let mut bad = Vec::new();
    let mut checks = 0;
    for d in 0..=2usize {
        for l in subsets(3) {
            if d >= 1 {
                let s = sheaf_section(d, &l, 6).unwrap();
                if s.indeterminates.len() as u64 != falling_factorial(l.len(), d) || s.constants_only() != (l.len() < d) {
                    bad.push(format!("sheaf d={d} L={:?}", l.points()));
                }
                let v = validate_sheaf_section(d, &l, 6, 100, 11 + d as u64).unwrap();
                checks += 1;
                if !v.passed() {
                    bad.push(format!("sheaf sampling d={d} L={:?}: {v:?}", l.points()));
                }
            }
            let f = free_module_section(d, &l, 6).unwrap();
            if f.rank() as u64 != falling_factorial(l.len(), d) || f.coefficients.indeterminates.len() != l.len() {
                bad.push(format!("module d={d} L={:?}", l.points()));
            }
            let v = validate_free_module_section(d, &l, 6, 100, 23 + d as u64).unwrap();
            checks += 1;
            if !v.passed() {
                bad.push(format!("module sampling d={d} L={:?}: {v:?}", l.points()));
            }
        }
    }
    verdict(
        "sheaf and free-module sections match sampled fixed points at m = 6",
        bad.is_empty(),
        format!("{checks} sampled checks, failures {bad:?}"),
    );
}

#[test]
fn skew_ring_axioms() {
    let report = skew_check(4, 6, 100, 7).unwrap();
    verdict(
        "skew ring axioms at m = 4 and support witness at m = 6",
        report.passed(),
        format!("{report:?}"),
    );
}

fn increasing_map<R: Rng>(rng: &mut R, len: u32, max: u32) -> Vec<u32> {
    let mut picks: Vec<u32> = rand::seq::index::sample(rng, max as usize, len as usize)
        .into_iter()
        .map(|i| i as u32 + 1)
        .collect();
    picks.sort_unstable();
    picks
}

#[test]
fn term_order_is_shift_compatible() {
    let mut rng = corpus::rng(1000);
    let params = CorpusParams {
        max_terms: 4,
        ..CorpusParams::default()
    };
    let mut bad = Vec::new();
    for k in 0..1000 {
        let f: Polynomial = random_polynomial(&mut rng, 2, 5, &params);
        let pi = increasing_map(&mut rng, 5, 12);
        let apply = |c: u32| pi[c as usize - 1];
        let moved = f.map_columns(apply);
        if moved.lm() != f.lm().map(|m| m.map_columns(apply)).as_ref() {
            bad.push(format!("pair {k}: {f} under {pi:?}"));
        }
        let a = corpus::random_monomial(&mut rng, 2, 5, 3);
        let b = corpus::random_monomial(&mut rng, 2, 5, 3);
        let shift = rng.gen_range(1..=7);
        let shifted = |m: &Monomial| m.map_columns(|c| c + shift);
        let order = TermOrder::LexColMajor;
        if order.compare(&a, &b) != order.compare(&shifted(&a), &shifted(&b))
            || order.compare(&a, &b) != order.compare(&a.map_columns(apply), &b.map_columns(apply))
        {
            bad.push(format!("compare {a} vs {b}"));
        }
    }
    verdict(
        "leading monomials commute with increasing maps on 1000 pairs",
        bad.is_empty(),
        format!("failures {:?}", bad.iter().take(5).collect::<Vec<_>>()),
    );
}
