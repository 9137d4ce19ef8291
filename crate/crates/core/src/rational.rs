//! Exact arbitrary-precision fractions.
//!
//! Values whose numerator and denominator fit in an `i64` are kept in a
//! machine-word [`Ratio`]; every operation that would overflow is redone over
//! [`BigRational`]. Each value has exactly one representation, so equality
//! and hashing work on the representation directly.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// Numerator never `i64::MIN`, so negation cannot overflow.
    Small(Ratio<i64>),
    Big(BigRational),
}

/// A fraction in lowest terms with a positive denominator.
///
/// Serializes as `"p/q"`, or as the bare integer when `q = 1`.
#[derive(Clone)]
pub struct Rational(Repr);

fn small(r: Ratio<i64>) -> Rational {
    if *r.numer() == i64::MIN {
        Rational(Repr::Big(widen(&r)))
    } else {
        Rational(Repr::Small(r))
    }
}

fn widen(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn big(r: BigRational) -> Rational {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) if n != i64::MIN => Rational(Repr::Small(Ratio::new_raw(n, d))),
        _ => Rational(Repr::Big(r)),
    }
}

impl Rational {
    /// `num / den`. Panics when `den == 0`.
    pub fn new(num: impl Into<i128>, den: impl Into<i128>) -> Self {
        let (num, den) = (num.into(), den.into());
        assert!(den != 0, "zero denominator");
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) if n != i64::MIN && d != i64::MIN => small(Ratio::new(n, d)),
            _ => Rational::from_bigints(num.into(), den.into()),
        }
    }

    /// `num / den` for arbitrary integers. Panics when `den == 0`.
    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        big(BigRational::new(num, den))
    }

    pub fn from_integer(v: impl Into<i128>) -> Self {
        Rational::new(v, 1)
    }

    pub fn zero() -> Self {
        Rational(Repr::Small(Ratio::zero()))
    }

    pub fn one() -> Self {
        Rational(Repr::Small(Ratio::one()))
    }

    pub fn half() -> Self {
        Rational::new(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => widen(r),
            Repr::Big(r) => r.clone(),
        }
    }

    /// Panics on zero.
    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(r) => {
                assert!(!r.is_zero(), "reciprocal of zero");
                let (n, d) = (*r.numer(), *r.denom());
                if n < 0 {
                    small(Ratio::new_raw(-d, -n))
                } else {
                    small(Ratio::new_raw(d, n))
                }
            }
            Repr::Big(r) => big(r.recip()),
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Nearest `f64`; exact fractions here have small numerators and
    /// denominators so the division is correctly rounded in practice.
    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(r) => r.to_f64(),
            Repr::Big(r) => r.to_f64(),
        }
        .unwrap_or(f64::NAN)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.hash(state)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational {0:?}")]
pub struct ParseRationalError(String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let (num, den) = match s.split_once('/') {
            Some((p, q)) => (p, q),
            None => (s, "1"),
        };
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_bigints(num, den))
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

fn add(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(r) = x.checked_add(y) {
            return small(r);
        }
    }
    big(a.to_big() + b.to_big())
}

fn sub(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(r) = x.checked_sub(y) {
            return small(r);
        }
    }
    big(a.to_big() - b.to_big())
}

fn mul(a: &Rational, b: &Rational) -> Rational {
    if let (Repr::Small(x), Repr::Small(y)) = (&a.0, &b.0) {
        if let Some(r) = x.checked_mul(y) {
            return small(r);
        }
    }
    big(a.to_big() * b.to_big())
}

fn div(a: &Rational, b: &Rational) -> Rational {
    mul(a, &b.recip())
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $f:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(self, rhs)
            }
        }
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                $f(&self, &rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                $f(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = add(self, rhs);
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = add(self, &rhs);
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(r) => small(-r),
            Repr::Big(r) => big(-r),
        }
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<u64> for Rational {
    fn from(v: u64) -> Self {
        Rational::from_integer(v)
    }
}
