//! Exact rationals with a canonical `p/q` text form.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Sub};
use std::str::FromStr;

use num_rational::Ratio;

/// A rational number in lowest terms with a positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new(numer, denom))
    }

    pub fn integer(value: i64) -> Self {
        Rational(Ratio::from_integer(value))
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> i64 {
        num_integer::Integer::div_ceil(&self.numer(), &self.denom())
    }

    pub fn floor(&self) -> i64 {
        num_integer::Integer::div_floor(&self.numer(), &self.denom())
    }

    /// Stern–Brocot mediant `(a+c)/(b+d)` of `a/b` and `c/d`.
    pub fn mediant(&self, other: &Rational) -> Rational {
        Rational::new(self.numer() + other.numer(), self.denom() + other.denom())
    }

    /// Compares `a/b` against this value without building a rational.
    pub fn cmp_fraction(&self, numer: i64, denom: i64) -> Ordering {
        debug_assert!(denom > 0);
        (self.numer() as i128 * denom as i128).cmp(&(numer as i128 * self.denom() as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational `{0}`")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: i64 = p.parse().map_err(|_| err())?;
        let q: i64 = q.parse().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        Ok(Rational::new(p, q))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

macro_rules! forward_op {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
    };
}

forward_op!(Add, add);
forward_op!(Sub, sub);
forward_op!(Mul, mul);
forward_op!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(6, 9);
        assert_eq!((r.numer(), r.denom()), (2, 3));
        assert_eq!(Rational::new(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::integer(2).to_string(), "2/1");
    }

    #[test]
    fn ceil_floor() {
        assert_eq!(Rational::new(5, 3).ceil(), 2);
        assert_eq!(Rational::new(5, 3).floor(), 1);
        assert_eq!(Rational::integer(2).ceil(), 2);
        assert_eq!(Rational::zero().ceil(), 0);
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5/6", "2/1", "0/1", "-7/3"] {
            assert_eq!(s.parse::<Rational>().unwrap().to_string(), s);
        }
        assert_eq!("4".parse::<Rational>().unwrap(), Rational::integer(4));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn mediant_and_compare() {
        let m = Rational::new(1, 2).mediant(&Rational::new(2, 3));
        assert_eq!(m, Rational::new(3, 5));
        assert_eq!(Rational::new(2, 3).cmp_fraction(3, 5), Ordering::Greater);
        assert_eq!(Rational::new(2, 3).cmp_fraction(4, 6), Ordering::Equal);
    }
}
