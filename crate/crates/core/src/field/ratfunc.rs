use std::fmt;
use std::str::FromStr;

use super::rational::forward_ops;
use super::{Field, FieldError, FieldScalar, FieldTag, Poly, Rational};

/// Rational function in `t` over `Q`: `numer / denom` with `denom` monic and
/// coprime to `numer`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    numer: Poly<Rational>,
    denom: Poly<Rational>,
}

impl RatFunc {
    pub fn new(numer: Poly<Rational>, denom: Poly<Rational>) -> Result<RatFunc, FieldError> {
        if denom.is_zero() {
            return Err(FieldError::ZeroDenominator);
        }
        Ok(Self::reduce(numer, denom))
    }

    fn reduce(numer: Poly<Rational>, denom: Poly<Rational>) -> RatFunc {
        if numer.is_zero() {
            return RatFunc::zero();
        }
        let (numer, denom) = if denom.is_constant() {
            (numer, denom)
        } else {
            let g = numer.gcd(&denom);
            if g.is_constant() {
                (numer, denom)
            } else {
                (numer.exact_div(&g).unwrap(), denom.exact_div(&g).unwrap())
            }
        };
        let lead = denom.leading().unwrap().clone();
        if lead.is_one() {
            RatFunc { numer, denom }
        } else {
            let inv = lead.inv().unwrap();
            RatFunc { numer: numer.scale(&inv), denom: denom.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly<Rational>) -> RatFunc {
        RatFunc { numer: p, denom: Poly::one() }
    }

    pub fn t() -> RatFunc {
        RatFunc::from_poly(Poly::x())
    }

    pub fn zero() -> RatFunc {
        RatFunc { numer: Poly::zero(), denom: Poly::one() }
    }

    pub fn one() -> RatFunc {
        RatFunc::from_poly(Poly::one())
    }

    pub fn numer(&self) -> &Poly<Rational> {
        &self.numer
    }

    pub fn denom(&self) -> &Poly<Rational> {
        &self.denom
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_constant()
    }

    /// `Some(c)` if this is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        (self.numer.is_constant() && self.denom.is_constant()).then(|| self.numer.coeff(0))
    }

    /// Value at `t = p`. Fails if the (reduced) denominator vanishes there.
    pub fn evaluate(&self, p: &Rational) -> Result<Rational, FieldError> {
        let den = self.denom.eval(p);
        if den.is_zero() {
            return Err(FieldError::Pole(p.clone()));
        }
        self.numer.eval(p).div(&den)
    }

    fn check_invariants(&self) {
        debug_assert!(self.denom.is_monic(), "denominator not monic: {self:?}");
        debug_assert!(
            self.numer.is_zero() && self.denom.is_constant() || self.numer.gcd(&self.denom).is_constant(),
            "not in lowest terms: {self:?}"
        );
    }
}

impl Field for RatFunc {
    const TAG: FieldTag = FieldTag::RatFunc;

    fn zero() -> Self {
        RatFunc::zero()
    }

    fn one() -> Self {
        RatFunc::one()
    }

    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn is_one(&self) -> bool {
        self.denom.is_constant() && self.numer.is_one_poly()
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let out = if self.denom == rhs.denom {
            Self::reduce(self.numer.add(&rhs.numer), self.denom.clone())
        } else {
            Self::reduce(
                self.numer.mul(&rhs.denom).add(&rhs.numer.mul(&self.denom)),
                self.denom.mul(&rhs.denom),
            )
        };
        out.check_invariants();
        out
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.denom.is_constant() && rhs.denom.is_constant() {
            return RatFunc::from_poly(self.numer.mul(&rhs.numer));
        }
        // Cross-cancel so the product is already in lowest terms.
        let g1 = self.numer.gcd(&rhs.denom);
        let g2 = rhs.numer.gcd(&self.denom);
        let n1 = self.numer.exact_div(&g1).unwrap();
        let d2 = rhs.denom.exact_div(&g1).unwrap();
        let n2 = rhs.numer.exact_div(&g2).unwrap();
        let d1 = self.denom.exact_div(&g2).unwrap();
        let out = RatFunc { numer: n1.mul(&n2), denom: d1.mul(&d2) };
        out.check_invariants();
        out
    }

    fn neg(&self) -> Self {
        RatFunc { numer: self.numer.neg(), denom: self.denom.clone() }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduce(self.denom.clone(), self.numer.clone()))
    }

    fn from_rational(q: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(q))
    }

    fn specialize(&self, point: &Rational) -> Result<Rational, FieldError> {
        self.evaluate(point)
    }

    fn roots_in_field(p: &Poly<Self>) -> Vec<Self> {
        super::ratfunc_roots(p)
    }

    fn to_scalar(&self) -> FieldScalar {
        FieldScalar::RatFunc(self.clone())
    }

    fn from_scalar(s: FieldScalar) -> Result<Self, FieldError> {
        match s {
            FieldScalar::RatFunc(f) => Ok(f),
            FieldScalar::Rational(_) => Err(FieldError::TagMismatch(FieldTag::RatFunc, FieldTag::Rational)),
        }
    }
}

impl Poly<Rational> {
    fn is_one_poly(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

forward_ops!(RatFunc);

impl From<Rational> for RatFunc {
    fn from(q: Rational) -> Self {
        RatFunc::from_rational(q)
    }
}

fn needs_parens(p: &Poly<Rational>) -> bool {
    let s = p.to_string();
    s.contains(' ') || s.contains('/') || s.contains('*') || s.starts_with('-')
}

/// `t + 1`, `(t + 1)/(t^2 + 1)`, `1/t`, `(1/2)/t`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_constant() {
            return write!(f, "{}", self.numer);
        }
        if needs_parens(&self.numer) {
            write!(f, "({})", self.numer)?;
        } else {
            write!(f, "{}", self.numer)?;
        }
        if needs_parens(&self.denom) {
            write!(f, "/({})", self.denom)
        } else {
            write!(f, "/{}", self.denom)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse_scalar(s)
    }
}
