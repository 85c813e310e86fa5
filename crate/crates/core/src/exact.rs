//! Exact arithmetic: arbitrary-precision rationals and angles measured in
//! units of π.
//!
//! Every branch decision in the index engine (is this angle a multiple of
//! 2π, which side of a floor boundary are we on) goes through this module and
//! never touches floating point.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator.
///
/// Serializes as the string `"p/q"` (or `"p"` when the denominator is 1).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den`. Panics if `den == 0`, like integer division.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Greatest integer `<= self`.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl From<BigRational> for Rational {
    fn from(value: BigRational) -> Self {
        Rational(value)
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

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("cannot parse rational from {s:?}"));
        let s = s.trim();
        match s.split_once('/') {
            Some((p, q)) => {
                let p: BigInt = p.trim().parse().map_err(|_| bad())?;
                let q: BigInt = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::Domain(format!("zero denominator in {s:?}")));
                }
                Ok(Rational(BigRational::new(p, q)))
            }
            None => {
                let p: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(p)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
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
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

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

/// `⌊a / b⌋` for `b > 0`.
pub fn floor_div(a: &Rational, b: &Rational) -> Result<BigInt> {
    if !b.is_positive() {
        return Err(Error::Domain(format!("floor_div divisor must be positive, got {b}")));
    }
    Ok((a / b).floor())
}

/// An angle `coeff · π`, kept exact.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle {
    coeff: Rational,
}

impl Angle {
    /// The angle `coeff · π`.
    pub fn pi_times(coeff: Rational) -> Self {
        Angle { coeff }
    }

    pub fn zero() -> Self {
        Angle { coeff: Rational::zero() }
    }

    /// Coefficient of π.
    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn scale(&self, factor: &Rational) -> Angle {
        Angle { coeff: &self.coeff * factor }
    }

    pub fn radians(&self) -> f64 {
        self.coeff.to_f64() * std::f64::consts::PI
    }

    /// True iff the angle lies in 2πℤ, i.e. `e^{i·angle} = 1` exactly.
    pub fn is_resonant(&self) -> bool {
        self.coeff.is_integer() && self.coeff.numer().is_even()
    }

    /// `⌊angle / 2π⌋`.
    pub fn full_turns(&self) -> BigInt {
        floor_div(&self.coeff, &Rational::from_integer(2)).expect("2 > 0")
    }
}

/// Free-function form of [`Angle::is_resonant`].
pub fn is_resonant(angle: &Angle) -> bool {
    angle.is_resonant()
}

impl Add for Angle {
    type Output = Angle;
    fn add(self, rhs: Angle) -> Angle {
        Angle { coeff: self.coeff + rhs.coeff }
    }
}

impl Add<&Angle> for &Angle {
    type Output = Angle;
    fn add(self, rhs: &Angle) -> Angle {
        Angle { coeff: &self.coeff + &rhs.coeff }
    }
}

impl Sub for Angle {
    type Output = Angle;
    fn sub(self, rhs: Angle) -> Angle {
        Angle { coeff: self.coeff - rhs.coeff }
    }
}

impl Neg for Angle {
    type Output = Angle;
    fn neg(self) -> Angle {
        Angle { coeff: -self.coeff }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})π", self.coeff)
    }
}

/// Converts a small exact integer to `i64`, reporting overflow as an internal error.
pub(crate) fn to_i64(value: &BigInt) -> Result<i64> {
    value
        .to_i64()
        .ok_or_else(|| Error::Internal(format!("integer {value} does not fit in i64")))
}
