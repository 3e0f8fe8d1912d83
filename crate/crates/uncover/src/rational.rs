//! Exact rational numbers with a `"p/q"` text form.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Arbitrary-precision rational. Serialized as the string `"p/q"` in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn integer(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `num/den`. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `k / 2^bits`.
    pub fn dyadic(k: u64, bits: u32) -> Self {
        Rational(BigRational::new(BigInt::from(k), BigInt::one() << bits))
    }

    pub fn from_bigs(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `max(self, 0)`.
    pub fn pos(self) -> Self {
        if self.0.is_negative() {
            Rational::zero()
        } else {
            self
        }
    }

    pub fn half(&self) -> Self {
        Rational(&self.0 / BigInt::from(2))
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, `p` and decimal `a.b`, each with an optional leading `-`.
    fn from_str(input: &str) -> Result<Self, Error> {
        let bad = |reason| Error::Rational { input: input.to_string(), reason };
        let (neg, body) = match input.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, input),
        };
        let value = if let Some((p, q)) = body.split_once('/') {
            if !digits(p) || !digits(q) {
                return Err(bad("expected digits on both sides of '/'"));
            }
            let den: BigInt = q.parse().map_err(|_| bad("bad denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            let num: BigInt = p.parse().map_err(|_| bad("bad numerator"))?;
            BigRational::new(num, den)
        } else if let Some((int, frac)) = body.split_once('.') {
            if !digits(int) || !digits(frac) {
                return Err(bad("expected digits around '.'"));
            }
            let scale = u32::try_from(frac.len()).map_err(|_| bad("too many decimals"))?;
            let num: BigInt = format!("{int}{frac}").parse().map_err(|_| bad("bad decimal"))?;
            BigRational::new(num, num_traits::pow(BigInt::from(10), scale as usize))
        } else {
            if !digits(body) {
                return Err(bad("expected 'p/q', an integer or a decimal"));
            }
            BigRational::from_integer(body.parse().map_err(|_| bad("bad integer"))?)
        };
        Ok(Rational(if neg { -value } else { value }))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational(self.0.$m(&rhs.0))
            }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational((&self.0).$m(rhs.0))
            }
        }
        impl<'a, 'b> $tr<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl SubAssign<Rational> for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// Shorthand used throughout tests and generators; panics on malformed input.
pub fn r(s: &str) -> Rational {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_forms() {
        assert_eq!(r("3/6"), Rational::frac(1, 2));
        assert_eq!(r("-7"), Rational::integer(-7));
        assert_eq!(r("0.65"), Rational::frac(13, 20));
        assert_eq!(r("-0.5"), Rational::frac(-1, 2));
    }

    #[test]
    fn rejects_malformed() {
        for s in ["1/0", "", "/", "1/", "a", "1.2.3", "--1", "1/-2", " 1", "1e3"] {
            assert!(s.parse::<Rational>().is_err(), "{s:?} accepted");
        }
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(r("4/8").to_string(), "1/2");
        assert_eq!(Rational::integer(3).to_string(), "3/1");
        assert_eq!(r("-2/4").to_string(), "-1/2");
    }

    #[test]
    fn json_round_trip() {
        let x = Rational::dyadic(12345, 32);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "\"12345/4294967296\"");
        let y: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }
}
