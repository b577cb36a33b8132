//! Exact coefficient fields.
//!
//! Polynomials are generic over [`Field`]; [`Rational`] (arbitrary precision)
//! is the default and [`Fp`] gives small prime fields.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rationals.
pub type Rational = BigRational;

pub trait Field:
    Clone
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    fn from_i64(v: i64) -> Self;
    /// Parses an unsigned literal `a` or `a/b`.
    fn parse_literal(s: &str) -> Option<Self>;
    /// True if printing needs an explicit leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn parse_literal(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if num.is_empty() || den.is_empty() {
            return None;
        }
        if !num.bytes().chain(den.bytes()).all(|b| b.is_ascii_digit()) {
            return None;
        }
        let num = BigInt::from_str(num).ok()?;
        let den = BigInt::from_str(den).ok()?;
        if Zero::is_zero(&den) {
            return None;
        }
        Some(BigRational::new(num, den))
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

/// Integers modulo the prime `P`. `P` must be prime and below `2^32`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(self.0 * rhs.0 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in Fp");
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn parse_literal(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let reduce = |t: &str| -> Option<Self> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            Some(t.bytes().fold(Fp(0), |acc, b| {
                acc * Fp(10 % P) + Fp(u64::from(b - b'0') % P)
            }))
        };
        let (n, d) = (reduce(num)?, reduce(den)?);
        if d.is_zero() {
            return None;
        }
        Some(n / d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for v in 1..7 {
            let a = F7::new(v);
            assert_eq!(a * a.inv(), F7::one());
        }
        assert_eq!(F7::new(-1).value(), 6);
    }

    #[test]
    fn literals() {
        let half = Rational::parse_literal("1/2").unwrap();
        assert_eq!(half.clone() + half, <Rational as Field>::one());
        assert!(Rational::parse_literal("1/0").is_none());
        assert!(Rational::parse_literal("-3").is_none());
        assert_eq!(F7::parse_literal("10").unwrap().value(), 3);
        assert_eq!(F7::parse_literal("1/2").unwrap(), F7::new(4));
    }
}
