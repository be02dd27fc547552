use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, FieldError, FieldScalar, FieldTag, Poly};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: BigInt, denom: BigInt) -> Result<Rational, FieldError> {
        if denom.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn new_i64(numer: i64, denom: i64) -> Result<Rational, FieldError> {
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn from_integer(v: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Rational {
        Rational(BigRational::from_integer(v))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }

    /// Decimal rendering for values whose denominator divides a power of ten
    /// (e.g. halves: `23/2` renders as `11.5`). Falls back to `p/q`.
    pub fn to_decimal_string(&self) -> String {
        let mut den = self.denom().clone();
        let two = BigInt::from(2);
        let five = BigInt::from(5);
        let (mut twos, mut fives) = (0u32, 0u32);
        while (&den % &two).is_zero() {
            den /= &two;
            twos += 1;
        }
        while (&den % &five).is_zero() {
            den /= &five;
            fives += 1;
        }
        if !den.is_one() {
            return self.to_string();
        }
        let digits = twos.max(fives);
        if digits == 0 {
            return self.numer().to_string();
        }
        let scale = num_traits::pow(BigInt::from(10), digits as usize);
        let scaled = self.numer() * &scale / self.denom();
        let sign = if scaled.is_negative() { "-" } else { "" };
        let mag = scaled.abs().to_string();
        let pad = (digits as usize + 1).saturating_sub(mag.len());
        let mag = format!("{}{}", "0".repeat(pad), mag);
        let (int, frac) = mag.split_at(mag.len() - digits as usize);
        format!("{sign}{int}.{frac}")
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
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

impl FromStr for Rational {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let r = super::parse_scalar(s)?;
        r.as_constant().ok_or_else(|| FieldError::NotConstant(s.trim().to_string()))
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Rational;

    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-&self.0)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.0.is_zero() {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(Rational(self.0.recip()))
        }
    }

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn specialize(&self, _point: &Rational) -> Result<Rational, FieldError> {
        Ok(self.clone())
    }

    fn roots_in_field(p: &Poly<Self>) -> Vec<Self> {
        super::rational_roots(p)
    }

    fn to_scalar(&self) -> FieldScalar {
        FieldScalar::Rational(self.clone())
    }

    fn from_scalar(s: FieldScalar) -> Result<Self, FieldError> {
        match s {
            FieldScalar::Rational(q) => Ok(q),
            FieldScalar::RatFunc(_) => Err(FieldError::TagMismatch(FieldTag::Rational, FieldTag::RatFunc)),
        }
    }
}

macro_rules! forward_ops {
    ($ty:ty) => {
        impl std::ops::Add for &$ty {
            type Output = $ty;
            fn add(self, rhs: Self) -> $ty {
                Field::add(self, rhs)
            }
        }
        impl std::ops::Sub for &$ty {
            type Output = $ty;
            fn sub(self, rhs: Self) -> $ty {
                Field::sub(self, rhs)
            }
        }
        impl std::ops::Mul for &$ty {
            type Output = $ty;
            fn mul(self, rhs: Self) -> $ty {
                Field::mul(self, rhs)
            }
        }
        /// Panics on division by zero, like integer division.
        impl std::ops::Div for &$ty {
            type Output = $ty;
            fn div(self, rhs: Self) -> $ty {
                Field::div(self, rhs).expect("division by zero")
            }
        }
        impl std::ops::Neg for &$ty {
            type Output = $ty;
            fn neg(self) -> $ty {
                Field::neg(self)
            }
        }
    };
}

pub(crate) use forward_ops;

forward_ops!(Rational);

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && *self.0.numer() == BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(&BigRational::from_integer(BigInt::from(*other)))
    }
}
