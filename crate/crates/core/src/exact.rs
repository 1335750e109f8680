//! Exact rational scalars.
//!
//! Every number in the pipeline is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Textual form is
//! `p` for integers and `p/q` otherwise, both for parsing and display.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("malformed rational literal {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Arithmetic operation selector for [`Rational::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact fraction `num/den` with `den > 0` and `gcd(|num|, den) = 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den` in canonical form.
    pub fn new(num: i64, den: i64) -> Result<Self, RationalError> {
        if den == 0 {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Result<Self, RationalError> {
        if den.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn signum(&self) -> Ordering {
        self.0.numer().sign().cmp(&num_bigint::Sign::NoSign)
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, RationalError> {
        if self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self, RationalError> {
        if rhs.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn pow(&self, exp: i32) -> Result<Self, RationalError> {
        if exp < 0 && self.is_zero() {
            return Err(RationalError::DivisionByZero);
        }
        Ok(Rational(num_traits::Pow::pow(&self.0, exp)))
    }

    pub fn arith(&self, rhs: &Rational, op: ArithOp) -> Result<Self, RationalError> {
        match op {
            ArithOp::Add => Ok(self + rhs),
            ArithOp::Sub => Ok(self - rhs),
            ArithOp::Mul => Ok(self * rhs),
            ArithOp::Div => self.checked_div(rhs),
        }
    }

    /// Lossy conversion used only for display purposes.
    pub fn to_f64_lossy(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

impl FromStr for Rational {
    type Err = RationalError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        fn digits(s: &str) -> bool {
            !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
        }
        let malformed = || RationalError::Parse(text.to_string());
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, text),
        };
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !digits(num) || den.is_some_and(|d| !digits(d)) {
            return Err(malformed());
        }
        let num: BigInt = num.parse().map_err(|_| malformed())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| malformed())?,
            None => BigInt::one(),
        };
        Rational::from_big(num * sign, den)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl $assign_trait<&Rational> for Rational {
            fn $assign_method(&mut self, rhs: &Rational) {
                self.0.$assign_method(&rhs.0);
            }
        }
        impl $assign_trait<Rational> for Rational {
            fn $assign_method(&mut self, rhs: Rational) {
                self.0.$assign_method(rhs.0);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign);
forward_binop!(Sub, sub, SubAssign, sub_assign);
forward_binop!(Mul, mul, MulAssign, mul_assign);

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

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::one(), |acc, x| acc * x)
    }
}

/// Shorthand for integer-valued rationals in tests and tables.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den).expect("nonzero denominator")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parts(r: &Rational) -> (String, String) {
        (r.numer().to_string(), r.denom().to_string())
    }

    #[test]
    fn parse_reduces_and_normalizes_sign() {
        assert_eq!(parts(&"3/6".parse().unwrap()), ("1".into(), "2".into()));
        assert_eq!(parts(&"-2/4".parse().unwrap()), ("-1".into(), "2".into()));
        assert_eq!(parts(&"7".parse().unwrap()), ("7".into(), "1".into()));
        assert_eq!(parts(&"0/5".parse().unwrap()), ("0".into(), "1".into()));
        assert_eq!(parts(&"-0".parse().unwrap()), ("0".into(), "1".into()));
    }

    #[test]
    fn parse_rejects_malformed_text() {
        for bad in [
            "", "-", "1/", "/2", "1/-2", "+3", "1.5", "a/b", "1/2/3", " 1", "--1",
        ] {
            assert!(
                matches!(bad.parse::<Rational>(), Err(RationalError::Parse(_))),
                "{bad:?} should not parse"
            );
        }
        assert_eq!(
            "5/0".parse::<Rational>(),
            Err(RationalError::DivisionByZero)
        );
    }

    #[test]
    fn display_uses_integer_shorthand() {
        assert_eq!(frac(6, 3).to_string(), "2");
        assert_eq!(frac(3, -6).to_string(), "-1/2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic_examples() {
        let half = frac(1, 2);
        let third = frac(1, 3);
        assert_eq!(half.arith(&third, ArithOp::Add).unwrap(), frac(5, 6));
        assert_eq!(half.arith(&Rational::one(), ArithOp::Mul).unwrap(), half);
        let m = frac(-1, 2);
        assert_eq!(m.arith(&m, ArithOp::Div).unwrap(), Rational::one());
        assert_eq!(
            half.arith(&Rational::zero(), ArithOp::Div),
            Err(RationalError::DivisionByZero)
        );
    }

    #[test]
    fn large_values_do_not_overflow() {
        let big = int(i64::MAX);
        let sq = &big * &big;
        assert_eq!(*sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(sq.checked_div(&big).unwrap(), big);
    }

    #[test]
    fn serde_uses_text_form() {
        let json = serde_json::to_string(&frac(-3, 4)).unwrap();
        assert_eq!(json, "\"-3/4\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, frac(-3, 4));
        assert!(serde_json::from_str::<Rational>("\"1/0\"").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (any::<i32>(), 1..=i32::MAX).prop_map(|(n, d)| frac(n as i64, d as i64))
    }

    proptest! {
        #[test]
        fn field_laws(a in arb_rational(), b in arb_rational()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }

        #[test]
        fn canonical_form_roundtrips_through_text(a in arb_rational()) {
            prop_assert!(a.denom() > &BigInt::zero());
            prop_assert!(num_integer::Integer::gcd(a.numer(), a.denom()).is_one());
            let back: Rational = a.to_string().parse().unwrap();
            prop_assert_eq!(parts(&back), parts(&a));
        }
    }
}
