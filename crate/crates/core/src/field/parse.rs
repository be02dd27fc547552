//! Textual scalar grammar: integers `-3`, rationals `3/4`, polynomials
//! `t^2 - 2*t + 1` and rational functions `(t+1)/(t^2+1)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' digits)?
//! atom   := digits | 't' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored everywhere. The result is always normalized.

use num_bigint::BigInt;

use super::{Field, FieldError, FieldScalar, FieldTag, Poly, RatFunc, Rational};

/// Parse a scalar as an element of `Q(t)`.
pub fn parse_scalar(input: &str) -> Result<RatFunc, FieldError> {
    let tokens: Vec<(usize, u8)> =
        input.bytes().enumerate().filter(|(_, b)| !b.is_ascii_whitespace()).collect();
    let mut p = Parser { tokens, pos: 0, len: input.len() };
    if p.tokens.is_empty() {
        return Err(p.error("empty scalar"));
    }
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parse a scalar into a specific field. For `Q` the text must not mention `t`
/// (after normalization).
pub fn parse_field<F: Field>(input: &str) -> Result<F, FieldError> {
    let r = parse_scalar(input)?;
    let s = match F::TAG {
        FieldTag::RatFunc => FieldScalar::RatFunc(r),
        FieldTag::Rational => FieldScalar::Rational(
            r.as_constant().ok_or_else(|| FieldError::NotConstant(input.trim().to_string()))?,
        ),
    };
    F::from_scalar(s)
}

struct Parser {
    tokens: Vec<(usize, u8)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<u8> {
        self.tokens.get(self.pos).map(|&(_, b)| b)
    }

    fn error(&self, msg: &str) -> FieldError {
        let pos = self.tokens.get(self.pos).map_or(self.len, |&(i, _)| i);
        FieldError::Parse { pos, msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<RatFunc, FieldError> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, FieldError> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let at = self.pos;
            let rhs = self.unary()?;
            acc = if op == b'*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).map_err(|_| {
                    let pos = self.tokens.get(at).map_or(self.len, |&(i, _)| i);
                    FieldError::Parse { pos, msg: "division by zero".into() }
                })?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RatFunc, FieldError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RatFunc, FieldError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = e
                .try_into()
                .ok()
                .filter(|&e: &u32| e <= 10_000)
                .ok_or_else(|| self.error("exponent too large"))?;
            let mut acc = RatFunc::one();
            for _ in 0..e {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<BigInt, FieldError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s: String = self.tokens[start..self.pos].iter().map(|&(_, b)| b as char).collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<RatFunc, FieldError> {
        match self.peek() {
            Some(b'0'..=b'9') => {
                let n = self.digits()?;
                Ok(RatFunc::from_rational(Rational::from_bigint(n)))
            }
            Some(b't') => {
                self.pos += 1;
                Ok(RatFunc::from_poly(Poly::x()))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_scalar("-3").unwrap(), RatFunc::from_i64(-3));
        assert_eq!(parse_scalar("3/4").unwrap(), RatFunc::from_rational(Rational::new_i64(3, 4).unwrap()));
        let p = parse_scalar("t^2 - 2*t + 1").unwrap();
        assert_eq!(p, parse_scalar("(t-1)^2").unwrap());
        let f = parse_scalar("(t+1)/(t^2+1)").unwrap();
        assert_eq!(f.to_string(), "(t + 1)/(t^2 + 1)");
        assert_eq!(parse_scalar(" ( t + 1 ) / ( t ^ 2 + 1 ) ").unwrap(), f);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("2t").is_err());
        assert!(parse_scalar("(t+1").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("t^").is_err());
    }

    #[test]
    fn field_specific_parse() {
        assert_eq!(parse_field::<Rational>("6/4").unwrap(), Rational::new_i64(3, 2).unwrap());
        assert!(parse_field::<Rational>("t").is_err());
        // t/t normalizes to 1, which is a constant
        assert_eq!(parse_field::<Rational>("t/t").unwrap(), Rational::one());
        assert_eq!(parse_field::<RatFunc>("t").unwrap(), RatFunc::t());
    }
}
