//! Equivariant ideals, Groebner bases, and their line-oriented file format.
//!
//! ```text
//! # comment
//! symmetry: inc
//! rows: 2
//! x[1,2] - x[1,1]
//! x[2,1]^2
//! ```
//!
//! `rows:` is omitted for `pairsym`, whose generators use `y[a,b]`. Groebner
//! output adds `basis-size: <n>` and `order: lex-colmajor` headers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::poly::{parse_polynomial_with_letter, Polynomial, TermOrder};
use crate::symmetry::SymmetryType;

/// The smallest ideal containing every image of every generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantIdeal<F: Field = Rational> {
    pub symmetry: SymmetryType,
    generators: Vec<Polynomial<F>>,
}

impl<F: Field> EquivariantIdeal<F> {
    /// Validates shapes, drops zero and repeated generators.
    pub fn new(symmetry: SymmetryType, generators: Vec<Polynomial<F>>) -> Result<Self> {
        let mut gens: Vec<Polynomial<F>> = Vec::with_capacity(generators.len());
        for g in generators {
            symmetry.check_poly(&g)?;
            if !g.is_zero() && !gens.contains(&g) {
                gens.push(g);
            }
        }
        Ok(EquivariantIdeal {
            symmetry,
            generators: gens,
        })
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn to_file_string(&self) -> String {
        let mut out = header(self.symmetry);
        for g in &self.generators {
            let _ = writeln!(out, "{}", g.display_with(self.symmetry.shape().letter()));
        }
        out
    }
}

/// Finite generators whose orbits form a Groebner basis: monic, autoreduced,
/// sorted by ascending leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<F: Field = Rational> {
    pub symmetry: SymmetryType,
    pub order: TermOrder,
    pub(crate) elements: Vec<Polynomial<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn elements(&self) -> &[Polynomial<F>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The ideal generated by the basis elements, for re-running completion.
    pub fn to_ideal(&self) -> EquivariantIdeal<F> {
        EquivariantIdeal {
            symmetry: self.symmetry,
            generators: self.elements.clone(),
        }
    }

    pub fn to_file_string(&self) -> String {
        let mut out = header(self.symmetry);
        let _ = writeln!(out, "order: {}", self.order);
        let _ = writeln!(out, "basis-size: {}", self.elements.len());
        for g in &self.elements {
            let _ = writeln!(out, "{}", g.display_with(self.symmetry.shape().letter()));
        }
        out
    }
}

fn header(symmetry: SymmetryType) -> String {
    let mut out = format!("symmetry: {}\n", symmetry.name());
    if let Some(rows) = symmetry.rows() {
        let _ = writeln!(out, "rows: {rows}");
    }
    out
}

/// Parsed contents of an ideal or Groebner basis file.
#[derive(Clone, Debug)]
pub struct IdealFile<F: Field = Rational> {
    pub symmetry: SymmetryType,
    pub order: Option<TermOrder>,
    pub basis_size: Option<usize>,
    pub generators: Vec<Polynomial<F>>,
}

impl<F: Field> IdealFile<F> {
    pub fn into_ideal(self) -> Result<EquivariantIdeal<F>> {
        EquivariantIdeal::new(self.symmetry, self.generators)
    }
}

pub fn parse_ideal_file<F: Field>(text: &str) -> Result<IdealFile<F>> {
    let mut symmetry_name: Option<(String, usize)> = None;
    let mut rows: Option<u32> = None;
    let mut order = None;
    let mut basis_size = None;
    let mut raw_gens: Vec<(usize, Polynomial<F>, Option<char>)> = Vec::new();

    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let start = offset;
        offset += line.len();
        let content = line.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        if let Some((key, value)) = content.split_once(':') {
            if !raw_gens.is_empty() {
                return Err(Error::parse(start, "header after generators"));
            }
            let value = value.trim();
            let value_at = start + key.len() + 1;
            match key.trim() {
                "symmetry" => symmetry_name = Some((value.to_string(), value_at)),
                "rows" => {
                    rows = Some(value.parse().map_err(|_| {
                        Error::parse(value_at, format!("invalid row count `{value}`"))
                    })?)
                }
                "order" => order = Some(value.parse().map_err(|_| {
                    Error::parse(value_at, format!("unknown order `{value}`"))
                })?),
                "basis-size" => {
                    basis_size = Some(value.parse().map_err(|_| {
                        Error::parse(value_at, format!("invalid basis size `{value}`"))
                    })?)
                }
                other => return Err(Error::parse(start, format!("unknown header `{other}`"))),
            }
            continue;
        }
        let (p, letter) = parse_polynomial_with_letter::<F>(content).map_err(|e| match e {
            Error::ParseError { pos, msg } => Error::ParseError {
                pos: start + pos,
                msg,
            },
            other => other,
        })?;
        raw_gens.push((start, p, letter));
    }

    let (name, name_at) =
        symmetry_name.ok_or_else(|| Error::parse(0, "missing `symmetry:` header"))?;
    let symmetry = SymmetryType::from_name(&name, rows).map_err(|e| match e {
        Error::ParseError { msg, .. } => Error::parse(name_at, msg),
        other => other,
    })?;
    if symmetry == SymmetryType::PairSym && rows.is_some() {
        return Err(Error::parse(0, "`rows:` is not allowed for pairsym"));
    }
    let letter = symmetry.shape().letter();
    let mut generators = Vec::with_capacity(raw_gens.len());
    for (at, p, l) in raw_gens {
        if l.is_some_and(|l| l != letter) {
            return Err(Error::parse(at, format!("{} ideals use `{letter}` variables", symmetry.name())));
        }
        symmetry.check_poly(&p)?;
        generators.push(p);
    }
    if let Some(n) = basis_size {
        if n != generators.len() {
            return Err(Error::parse(
                0,
                format!("basis-size {n} does not match {} listed elements", generators.len()),
            ));
        }
    }
    Ok(IdealFile {
        symmetry,
        order,
        basis_size,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let text = "# shift ideal\nsymmetry: inc\nrows: 1\n\nx[1,2] - x[1,1]  # generator\n";
        let file = parse_ideal_file::<Rational>(text).unwrap();
        let ideal = file.into_ideal().unwrap();
        assert_eq!(ideal.symmetry, SymmetryType::IncColumns { rows: 1 });
        assert_eq!(ideal.generators(), &[p("x[1,2] - x[1,1]")]);
        let again = parse_ideal_file::<Rational>(&ideal.to_file_string())
            .unwrap()
            .into_ideal()
            .unwrap();
        assert_eq!(again, ideal);
    }

    #[test]
    fn pairsym_files() {
        let text = "symmetry: pairsym\ny[1,1]*y[2,2]\n";
        let ideal = parse_ideal_file::<Rational>(text).unwrap().into_ideal().unwrap();
        assert_eq!(ideal.to_file_string(), "symmetry: pairsym\ny[1,1]*y[2,2]\n");
        assert!(parse_ideal_file::<Rational>("symmetry: pairsym\nx[1,1]\n").is_err());
        assert!(parse_ideal_file::<Rational>("symmetry: pairsym\nrows: 2\n").is_err());
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_ideal_file::<Rational>("x[1,1]\n"),
            Err(Error::ParseError { .. })
        ));
        assert!(parse_ideal_file::<Rational>("symmetry: inc\n").is_err());
        assert!(parse_ideal_file::<Rational>("symmetry: weird\nrows: 1\n").is_err());
        assert!(matches!(
            parse_ideal_file::<Rational>("symmetry: inc\nrows: 1\nx[2,1]\n"),
            Err(Error::ShapeError(_))
        ));
        let err = parse_ideal_file::<Rational>("symmetry: inc\nrows: 1\nx[1,1] +* 2\n").unwrap_err();
        assert!(matches!(err, Error::ParseError { pos, .. } if pos > 23));
        assert!(parse_ideal_file::<Rational>("symmetry: inc\nrows: 1\nbasis-size: 2\nx[1,1]\n").is_err());
    }
}
