use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::{Monomial, Var};
use crate::field::{Field, Rational};

/// A polynomial with exact coefficients. Terms are keyed by monomial in
/// ascending term order, so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<F: Field = Rational> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for Polynomial<F> {
    fn default() -> Self {
        Polynomial::zero()
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: F) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn one() -> Self {
        Polynomial::constant(F::one())
    }

    pub fn term(c: F, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(F::one(), m)
    }

    pub fn var(row: u32, col: u32) -> Self {
        Polynomial::monomial(Monomial::var(Var::new(row, col)))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (F, Monomial)>) -> Self {
        let mut p = Polynomial::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + '_ {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> + '_ {
        self.terms.keys().rev()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.iter().next_back()
    }

    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    pub fn lc(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    pub fn add_term(&mut self, c: F, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, c: &F, m: &Monomial, other: &Polynomial<F>) {
        for (om, oc) in &other.terms {
            self.add_term(c.clone() * oc.clone(), m.mul(om));
        }
    }

    pub fn scale(&self, c: &F) -> Polynomial<F> {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial<F> {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(t, v)| (t.mul(m), v.clone()))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Polynomial<F> {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    pub fn remove_leading(&mut self) -> Option<(Monomial, F)> {
        self.terms.pop_last()
    }

    /// Distinct column indices, ascending.
    pub fn columns(&self) -> Vec<u32> {
        let mut cols: Vec<u32> = self.terms.keys().flat_map(|m| m.columns()).collect();
        cols.sort_unstable();
        cols.dedup();
        cols
    }

    pub fn rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.terms.keys().flat_map(|m| m.rows()).collect();
        rows.sort_unstable();
        rows.dedup();
        rows
    }

    /// Number of distinct columns.
    pub fn width(&self) -> usize {
        self.columns().len()
    }

    pub fn max_col(&self) -> u32 {
        self.terms.keys().map(Monomial::max_col).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn map_vars(&self, mut f: impl FnMut(Var) -> Var) -> Polynomial<F> {
        Polynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (c.clone(), m.map_vars(&mut f))),
        )
    }

    pub fn map_columns(&self, mut f: impl FnMut(u32) -> u32) -> Polynomial<F> {
        self.map_vars(|v| Var::new(v.row, f(v.col)))
    }

    /// Formats in the textual polynomial syntax with the given variable letter.
    pub fn display_with(&self, letter: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&m.display_with(letter));
            } else {
                out.push_str(&format!("{abs}*{}", m.display_with(letter)));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with('x'))
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c.clone(), m.clone());
        }
        out
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: &Polynomial<F>) -> Polynomial<F> {
        let mut out = Polynomial::zero();
        for (m, c) in &rhs.terms {
            out.add_scaled(c, m, self);
        }
        out
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        self.scale(&-F::one())
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Polynomial<F>) -> Polynomial<F> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Polynomial;

    fn x(r: u32, c: u32) -> P {
        P::var(r, c)
    }

    #[test]
    fn ring_ops() {
        let a = &x(1, 1) + &x(1, 2);
        let b = &x(1, 1) - &x(1, 2);
        let prod = &a * &b;
        let expected = &(&x(1, 1) * &x(1, 1)) - &(&x(1, 2) * &x(1, 2));
        assert_eq!(prod, expected);
        assert!((&a - &a).is_zero());
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.lm().unwrap(), &Monomial::from_triples(&[(1, 2, 2)]));
    }

    #[test]
    fn monic_and_display() {
        let p = P::from_terms([
            (Rational::from_i64(3), Monomial::from_triples(&[(1, 4, 2), (2, 7, 1)])),
            (
                Rational::parse_literal("1/2").unwrap().neg(),
                Monomial::from_triples(&[(1, 1, 1)]),
            ),
        ]);
        assert_eq!(p.to_string(), "3*x[1,4]^2*x[2,7] - 1/2*x[1,1]");
        assert_eq!(p.monic().lc().unwrap(), &Rational::from_i64(1));
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!((-&P::one()).to_string(), "-1");
    }
}
