use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use thiserror::Error;

use equinoether::equivariant::{
    chain_analyze_with_budget, cycle_chain, diagonal_chain, eq_buchberger_with_stats, eq_divides,
    eq_member, parse_ideal_file, Budget, ChainReport, EquivariantIdeal, DEFAULT_SPAIR_BUDGET,
};
use equinoether::orbitcat::{
    free_module_section, hom_set, hom_stabilization, sheaf_section, validate_free_module_section,
    validate_sheaf_section, OrbitObject,
};
use equinoether::relations::{extendable, growth as growth_table};
use equinoether::{
    parse_polynomial, skewalg, Error, FinitePartialInjection, Polynomial, Rational, RelationKind,
    SymmetryType, TermOrder,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::BudgetExceeded(_)) => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(Error::InvalidTuple(_)) => "invalid_tuple",
            CliError::Core(Error::BudgetExceeded(_)) => "budget_exceeded",
            CliError::Core(Error::ShapeError(_)) => "shape_error",
            CliError::Core(Error::ParseError { .. }) => "parse_error",
            CliError::Core(Error::Unsupported(_)) => "unsupported",
            CliError::Io { .. } => "io_error",
            CliError::Usage(_) => "usage_error",
        }
    }
}

/// A report in both renderings; `ok == false` maps to exit status 1.
pub struct Outcome {
    pub json: Value,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn new(json: Value, text: String) -> Self {
        Outcome { json, text, ok: true }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_ideal(path: &Path) -> Result<EquivariantIdeal<Rational>, CliError> {
    Ok(parse_ideal_file(&read(path)?)?.into_ideal()?)
}

fn budget(spairs: Option<u64>) -> Budget {
    Budget::new(spairs.map_or(DEFAULT_SPAIR_BUDGET, |b| b as usize))
}

fn letter(symmetry: SymmetryType) -> char {
    symmetry.shape().letter()
}

fn parse_points(s: &str) -> Result<OrbitObject, CliError> {
    let points = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|e| CliError::Usage(format!("bad point `{p}`: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrbitObject::new(points)?)
}

pub fn growth(kind: RelationKind, n: usize) -> Result<Outcome, CliError> {
    let table = growth_table(kind, n)?;
    let mut text = format!("kind: {kind}\n{:>3} {:>12} {:>13}\n", "n", "tupleOrbits", "subsetOrbits");
    let mut rows = Vec::new();
    for (n, row) in &table.rows {
        let _ = writeln!(text, "{n:>3} {:>12} {:>13}", row.tuple_orbits, row.subset_orbits);
        rows.push(json!({
            "n": n,
            "tupleOrbits": row.tuple_orbits,
            "subsetOrbits": row.subset_orbits,
            "highlyTransitive": row.tuple_orbits == 1,
            "highlyHomogeneous": row.subset_orbits == 1,
        }));
    }
    Ok(Outcome::new(json!({ "kind": kind.name(), "rows": rows }), text))
}

fn parse_map(s: &str) -> Result<FinitePartialInjection, CliError> {
    let pairs = s
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let (a, b) = p
                .split_once("->")
                .ok_or_else(|| CliError::Usage(format!("expected `a->b`, got `{p}`")))?;
            let num = |x: &str| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| CliError::Usage(format!("bad index `{}`: {e}", x.trim())))
            };
            Ok((num(a)?, num(b)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(FinitePartialInjection::new(pairs)?)
}

pub fn extend(kind: RelationKind, map: &str) -> Result<Outcome, CliError> {
    let sigma = parse_map(map)?;
    let ok = extendable(kind, &sigma);
    Ok(Outcome::new(
        json!({ "kind": kind.name(), "map": sigma.to_string(), "extendable": ok }),
        format!("{ok}\n"),
    ))
}

pub fn divides(symmetry: &str, rows: Option<u32>, divisor: &str, target: &str) -> Result<Outcome, CliError> {
    let symmetry = SymmetryType::from_name(symmetry, rows)?;
    let mono = |s: &str| -> Result<_, CliError> {
        let p: Polynomial = parse_polynomial(s)?;
        match p.leading_term() {
            Some((m, c)) if p.len() == 1 && *c == Rational::from_integer(1.into()) => Ok(m.clone()),
            _ => Err(CliError::Usage(format!("`{s}` is not a monomial"))),
        }
    };
    let (m, n) = (mono(divisor)?, mono(target)?);
    let witness = eq_divides(&m, &n, symmetry)?;
    let text = match &witness {
        Some(w) => match &w.rows {
            Some(r) => format!("true\ncolumns: {}\nrows: {r}\n", w.columns),
            None => format!("true\ncolumns: {}\n", w.columns),
        },
        None => "false\n".to_string(),
    };
    let json = json!({
        "symmetry": symmetry.name(),
        "divides": witness.is_some(),
        "witness": witness.as_ref().map(|w| json!({
            "columns": w.columns.pairs(),
            "rows": w.rows.as_ref().map(|r| r.pairs().to_vec()),
        })),
    });
    Ok(Outcome::new(json, text))
}

pub fn gb(ideal: &Path, output: Option<&Path>, spairs: Option<u64>) -> Result<Outcome, CliError> {
    let ideal = load_ideal(ideal)?;
    let (basis, stats) = eq_buchberger_with_stats(&ideal, TermOrder::LexColMajor, budget(spairs))?;
    let text = basis.to_file_string();
    if let Some(path) = output {
        fs::write(path, &text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
    }
    let l = letter(basis.symmetry);
    let json = json!({
        "symmetry": basis.symmetry.name(),
        "rows": basis.symmetry.rows(),
        "order": basis.order.name(),
        "basis": basis.elements().iter().map(|g| g.display_with(l)).collect::<Vec<_>>(),
        "stats": serde_json::to_value(stats).expect("stats serialize"),
    });
    Ok(Outcome::new(json, text))
}

pub fn member(ideal: &Path, poly: &str, assert: bool, spairs: Option<u64>) -> Result<Outcome, CliError> {
    let ideal = load_ideal(ideal)?;
    let f: Polynomial = parse_polynomial(poly)?;
    let (basis, _) = eq_buchberger_with_stats(&ideal, TermOrder::LexColMajor, budget(spairs))?;
    let member = eq_member(&f, &basis)?;
    Ok(Outcome {
        json: json!({ "poly": f.display_with(letter(ideal.symmetry)), "member": member }),
        text: format!("{member}\n"),
        ok: member || !assert,
    })
}

pub fn chain(
    stages: &[PathBuf],
    builtin: Option<&str>,
    length: u32,
    horizon: Option<u64>,
    expect_stabilize: bool,
    spairs: Option<u64>,
) -> Result<Outcome, CliError> {
    let (symmetry, gens): (SymmetryType, Vec<Vec<Polynomial>>) = match builtin {
        Some("diagonal") => (SymmetryType::PairSym, diagonal_chain(length)),
        Some(_) => (SymmetryType::PairSym, cycle_chain(length)),
        None => {
            if stages.is_empty() {
                return Err(CliError::Usage("give `--stage FILE` at least once or `--builtin`".into()));
            }
            let ideals = stages.iter().map(|p| load_ideal(p)).collect::<Result<Vec<_>, _>>()?;
            let symmetry = ideals[0].symmetry;
            if let Some(bad) = ideals.iter().position(|i| i.symmetry != symmetry) {
                return Err(CliError::Usage(format!(
                    "{}: symmetry differs from the first stage",
                    stages[bad].display()
                )));
            }
            (symmetry, ideals.into_iter().map(|i| i.generators().to_vec()).collect())
        }
    };
    let horizon = horizon.map_or(gens.len(), |h| h as usize);
    let report = chain_analyze_with_budget(symmetry, &gens, horizon, budget(spairs))?;
    let mut text = match &report {
        ChainReport::Stabilized { stage, .. } => format!("stabilized at stage {stage}\n"),
        ChainReport::NoStabilizationWithinHorizon { horizon, .. } => {
            format!("no stabilization within horizon {horizon}\n")
        }
    };
    for w in report.witnesses() {
        let checked: u64 = w.certificates.iter().map(|c| c.injection_pairs_checked).sum();
        let _ = write!(text, "stage {} -> {}: new generator {}", w.stage, w.stage + 1, w.generator);
        if w.certificates.is_empty() {
            text.push('\n');
        } else {
            let _ = writeln!(text, " ({} certificates, {checked} injection pairs checked)", w.certificates.len());
        }
    }
    let mut json = serde_json::to_value(&report).expect("reports serialize");
    json["symmetry"] = json!(symmetry.name());
    Ok(Outcome {
        json,
        text,
        ok: !expect_stabilize || report.stabilized_at().is_some(),
    })
}

pub fn hom(kind: RelationKind, t: &str, l: &str, m_max: usize, list: bool) -> Result<Outcome, CliError> {
    let (t, l) = (parse_points(t)?, parse_points(l)?);
    let morphisms = hom_set(kind, &t, &l);
    let mut json = json!({
        "kind": kind.name(),
        "T": t.points(),
        "L": l.points(),
        "count": morphisms.len(),
        "stabilized_at": Value::Null,
    });
    let mut text = format!("hom count: {}\n", morphisms.len());
    if kind == RelationKind::FullSymmetric {
        let report = hom_stabilization(&t, &l, m_max)?;
        json["stabilized_at"] = json!(report.stabilized_at);
        json["bruteforce"] = json!(report
            .counts
            .iter()
            .map(|(m, c)| json!({ "m": m, "count": c }))
            .collect::<Vec<_>>());
        json["agrees"] = json!(report.matches());
        let _ = writeln!(
            text,
            "brute-force count at m = {m_max}: {}\nstabilized at: {}",
            report.count,
            report.stabilized_at.map_or("not observed".to_string(), |m| format!("m = {m}"))
        );
    }
    if list {
        json["witnesses"] = json!(morphisms.iter().map(|f| f.witness.to_string()).collect::<Vec<_>>());
        for f in &morphisms {
            let _ = writeln!(text, "{}", f.witness);
        }
    }
    Ok(Outcome::new(json, text))
}

pub fn sheaf(d: usize, l: &str, m: u32, module: bool, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let l = parse_points(l)?;
    let fmt_tuple = |t: &Vec<u32>| {
        format!("({})", t.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
    };
    let (mut json, mut text, validation) = if module {
        let s = free_module_section(d, &l, m)?;
        let v = validate_free_module_section(d, &l, m, samples, seed)?;
        let text = format!(
            "rank {} over k[x_l : l in {:?}]\nbasis: {}\n",
            s.rank(),
            l.points(),
            s.basis.iter().map(fmt_tuple).collect::<Vec<_>>().join(" ")
        );
        (serde_json::to_value(&s).expect("sections serialize"), text, v)
    } else {
        let s = sheaf_section(d, &l, m)?;
        let v = validate_sheaf_section(d, &l, m, samples, seed)?;
        let text = if s.constants_only() {
            "constants only\n".to_string()
        } else {
            format!(
                "{} indeterminates: {}\n",
                s.indeterminates.len(),
                s.indeterminates.iter().map(fmt_tuple).collect::<Vec<_>>().join(" ")
            )
        };
        (serde_json::to_value(&s).expect("sections serialize"), text, v)
    };
    let _ = writeln!(
        text,
        "validation: {} samples, {} fixed, {} mismatches",
        validation.samples, validation.fixed, validation.mismatches
    );
    json["validation"] = serde_json::to_value(&validation).expect("reports serialize");
    Ok(Outcome {
        json,
        text,
        ok: validation.passed(),
    })
}

pub fn skew_check(m: u32, support_m: u32, samples: usize, seed: u64) -> Result<Outcome, CliError> {
    let report = skewalg::skew_check(m, support_m, samples, seed)?;
    let text = format!(
        "m = {m}: {} triples, failures: associativity {}, distributivity {}, identity {}, action {}\n\
         m = {support_m}: {} polynomials, support failures {}\n",
        report.triples,
        report.associativity_failures,
        report.distributivity_failures,
        report.identity_failures,
        report.action_failures,
        report.polynomials,
        report.support_failures,
    );
    Ok(Outcome {
        ok: report.passed(),
        json: serde_json::to_value(&report).expect("reports serialize"),
        text,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maps_and_points() {
        assert_eq!(parse_map("1->4, 3->7").unwrap().pairs(), &[(1, 4), (3, 7)]);
        assert!(parse_map("1->4,2->4").is_err());
        assert!(parse_map("1-4").is_err());
        assert_eq!(parse_points("3,1").unwrap().points(), &[1, 3]);
        assert!(parse_points("").unwrap().is_empty());
        assert!(parse_points("1,x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::BudgetExceeded("x".into())).exit_code(), 3);
        assert_eq!(CliError::from(Error::ShapeError("x".into())).exit_code(), 2);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
    }
}
