//! The textual polynomial syntax: `3*x[1,4]^2*x[2,7] - 1/2*x[1,1]`.
//!
//! Terms are joined by `+`/`-`; a term is an optional coefficient (`a` or `a/b`)
//! followed by `*`-separated factors `x[i,j]` or `y[a,b]`, each with an optional
//! `^e`. Whitespace is ignored. Error positions are byte offsets into the input.

use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::Field;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(Error::parse(self.pos, format!("expected `{}`", b as char)))
        }
    }

    /// Digits, allowing interior whitespace to be skipped only before the first digit.
    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        self.digits()?
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }
}

/// Parses a polynomial; also reports which variable letter it used, if any.
pub fn parse_polynomial_with_letter<F: Field>(s: &str) -> Result<(Polynomial<F>, Option<char>)> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut letter: Option<char> = None;
    let mut poly = Polynomial::zero();
    if cur.peek().is_none() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let mut first = true;
    loop {
        let negative = if cur.eat(b'-') {
            true
        } else if cur.eat(b'+') || first {
            false
        } else {
            match cur.peek() {
                None => break,
                Some(c) => {
                    return Err(Error::parse(
                        cur.pos,
                        format!("expected `+` or `-`, found `{}`", c as char),
                    ))
                }
            }
        };
        first = false;
        let (c, m) = parse_term::<F>(&mut cur, &mut letter)?;
        poly.add_term(if negative { -c } else { c }, m);
        if cur.peek().is_none() {
            break;
        }
    }
    Ok((poly, letter))
}

pub fn parse_polynomial<F: Field>(s: &str) -> Result<Polynomial<F>> {
    parse_polynomial_with_letter(s).map(|(p, _)| p)
}

fn parse_term<F: Field>(cur: &mut Cursor<'_>, letter: &mut Option<char>) -> Result<(F, Monomial)> {
    let mut coeff = F::one();
    let mut factors = Vec::new();
    let mut expect_factor = true;
    match cur.peek() {
        Some(b) if b.is_ascii_digit() => {
            let start = cur.pos;
            let mut lit = cur.digits()?;
            if cur.eat(b'/') {
                lit.push('/');
                lit.push_str(&cur.digits()?);
            }
            coeff = F::parse_literal(&lit)
                .ok_or_else(|| Error::parse(start, format!("invalid coefficient `{lit}`")))?;
            expect_factor = cur.eat(b'*');
        }
        Some(b'x') | Some(b'y') => {}
        Some(c) => {
            return Err(Error::parse(
                cur.pos,
                format!("expected a coefficient or variable, found `{}`", c as char),
            ))
        }
        None => return Err(Error::parse(cur.pos, "unexpected end of input")),
    }
    while expect_factor {
        let at = cur.pos;
        let l = match cur.peek() {
            Some(b @ (b'x' | b'y')) => b as char,
            _ => return Err(Error::parse(cur.pos, "expected a variable")),
        };
        cur.pos += 1;
        match letter {
            Some(prev) if *prev != l => {
                return Err(Error::parse(at, "cannot mix `x` and `y` variables"))
            }
            _ => *letter = Some(l),
        }
        cur.expect(b'[')?;
        let idx_at = cur.pos;
        let a = cur.number()?;
        cur.expect(b',')?;
        let b = cur.number()?;
        cur.expect(b']')?;
        if a == 0 || b == 0 {
            return Err(Error::parse(idx_at, "indices must be positive"));
        }
        let e = if cur.eat(b'^') { cur.number()? } else { 1 };
        factors.push((Var::new(a, b), e));
        expect_factor = cur.eat(b'*');
    }
    Ok((coeff, Monomial::from_exps(factors)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rational};

    type P = Polynomial<Rational>;

    #[test]
    fn parses_the_documented_example() {
        let p: P = parse_polynomial("3*x[1,4]^2*x[2,7] - 1/2*x[1,1]").unwrap();
        assert_eq!(p.to_string(), "3*x[1,4]^2*x[2,7] - 1/2*x[1,1]");
        let q: P = parse_polynomial("  - 1/2 * x[ 1 , 1 ]+3*x[2,7]*x[1,4]^2 ").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn constants_and_cancellation() {
        let p: P = parse_polynomial("x[1,1] + 2 - x[1,1]").unwrap();
        assert_eq!(p, P::constant(Rational::from_i64(2)));
        let z: P = parse_polynomial("0").unwrap();
        assert!(z.is_zero());
        let (y, l) = parse_polynomial_with_letter::<Rational>("y[3,7]*y[5,7]").unwrap();
        assert_eq!(l, Some('y'));
        assert_eq!(y.display_with('y'), "y[3,7]*y[5,7]");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_polynomial::<Rational>("x[1,1] + x[0,2]").unwrap_err();
        assert_eq!(err, Error::parse(11, "indices must be positive"));
        assert!(matches!(
            parse_polynomial::<Rational>("x[1,1] y[1,1]"),
            Err(Error::ParseError { pos: 7, .. })
        ));
        assert!(parse_polynomial::<Rational>("x[1,1]*y[1,1]").is_err());
        assert!(parse_polynomial::<Rational>("").is_err());
        assert!(parse_polynomial::<Rational>("x[1,1] +").is_err());
        assert!(parse_polynomial::<Rational>("1/0*x[1,1]").is_err());
        assert!(parse_polynomial::<Rational>("x[1,]").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let p: Polynomial<Fp<5>> = parse_polynomial("7*x[1,1] - 1").unwrap();
        assert_eq!(p.to_string(), "2*x[1,1] + 4");
    }
}
