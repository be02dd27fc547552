//! Exact scalar fields: the rationals and univariate rational functions `Q(t)`.
//!
//! Every matrix in the crate is generic over [`Field`]. The two concrete
//! fields are [`Rational`] and [`RatFunc`]; [`FieldScalar`] is the tagged,
//! dynamically typed form used at I/O boundaries where the field is only
//! known at runtime.

mod parse;
mod poly;
mod ratfunc;
mod rational;
mod roots;

use std::fmt;

use thiserror::Error;

pub use parse::{parse_field, parse_scalar};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use roots::{ratfunc_roots, rational_roots};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("malformed scalar: zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("field tag mismatch: {0} vs {1}")]
    TagMismatch(FieldTag, FieldTag),
    #[error("pole at t = {0}")]
    Pole(Rational),
    #[error("scalar parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("scalar `{0}` is not a constant")]
    NotConstant(String),
}

/// Which exact field a scalar (or a whole matrix) lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rational,
    RatFunc,
}

impl FieldTag {
    /// The name used in representation files: `Q` or `Q(t)`.
    pub fn file_name(self) -> &'static str {
        match self {
            FieldTag::Rational => "Q",
            FieldTag::RatFunc => "Q(t)",
        }
    }

    pub fn from_file_name(s: &str) -> Option<FieldTag> {
        match s {
            "Q" => Some(FieldTag::Rational),
            "Q(t)" => Some(FieldTag::RatFunc),
            _ => None,
        }
    }
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.file_name())
    }
}

/// An exact field of characteristic zero.
///
/// Values are always kept in canonical form, so structural equality is field
/// equality.
pub trait Field: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    /// The canonical embedding of `Q`.
    fn from_rational(q: Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(Rational::from_integer(v))
    }

    /// Substitute `t = point`. Identity on `Q`.
    fn specialize(&self, point: &Rational) -> Result<Rational, FieldError>;

    /// Distinct roots of `p` lying in this field (linear factors only).
    fn roots_in_field(p: &Poly<Self>) -> Vec<Self>;

    fn to_scalar(&self) -> FieldScalar;
    fn from_scalar(s: FieldScalar) -> Result<Self, FieldError>;
}

/// Binary field operation for [`FieldScalar::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A scalar whose field is chosen at runtime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldScalar {
    Rational(Rational),
    RatFunc(RatFunc),
}

impl FieldScalar {
    pub fn tag(&self) -> FieldTag {
        match self {
            FieldScalar::Rational(_) => FieldTag::Rational,
            FieldScalar::RatFunc(_) => FieldTag::RatFunc,
        }
    }

    /// Canonical form. Values are canonical on construction, so this only
    /// re-runs the reduction; it is idempotent.
    pub fn normalize(&self) -> FieldScalar {
        match self {
            FieldScalar::Rational(q) => FieldScalar::Rational(q.clone()),
            FieldScalar::RatFunc(f) => FieldScalar::RatFunc(
                RatFunc::new(f.numer().clone(), f.denom().clone())
                    .expect("canonical denominators are nonzero"),
            ),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldScalar::Rational(q) => q.is_zero(),
            FieldScalar::RatFunc(f) => f.is_zero(),
        }
    }

    pub fn arith(&self, op: ArithOp, rhs: &FieldScalar) -> Result<FieldScalar, FieldError> {
        fn apply<F: Field>(a: &F, op: ArithOp, b: &F) -> Result<F, FieldError> {
            Ok(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Div => a.div(b)?,
            })
        }
        match (self, rhs) {
            (FieldScalar::Rational(a), FieldScalar::Rational(b)) => {
                apply(a, op, b).map(FieldScalar::Rational)
            }
            (FieldScalar::RatFunc(a), FieldScalar::RatFunc(b)) => apply(a, op, b).map(FieldScalar::RatFunc),
            _ => Err(FieldError::TagMismatch(self.tag(), rhs.tag())),
        }
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldScalar::Rational(q) => q.fmt(f),
            FieldScalar::RatFunc(r) => r.fmt(f),
        }
    }
}
