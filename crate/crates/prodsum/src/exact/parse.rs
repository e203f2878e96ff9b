//! Recursive-descent parser for the canonical text grammar.
//!
//! ```text
//! expr   := term (('+'|'-') term)*
//! term   := unary (('*'|'/') unary)*
//! unary  := ('-'|'+')* power
//! power  := atom ('^' digits)?
//! atom   := digits | 'a' | 's' | 't' | '(' expr ')'
//! ```
//!
//! This accepts every string the renderers emit, plus parenthesized products
//! and powers, so displayed formulas can be written down directly.

use num_bigint::BigInt;
use num_traits::One;

use super::poly::{MultiPolynomial, Var};
use super::ratfunc::RationalFunction;
use super::rational::ExactRational;
use crate::{Error, Result};

pub fn parse_ratfunc(text: &str) -> Result<RationalFunction> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input at byte {}",
            p.pos
        )));
    }
    Ok(value)
}

/// Parse text that must denote a polynomial (denominator 1 after reduction).
pub fn parse_poly(text: &str) -> Result<MultiPolynomial> {
    let f = parse_ratfunc(text)?;
    f.as_poly()
        .cloned()
        .ok_or_else(|| Error::Parse(format!("'{text}' is not a polynomial")))
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == b'+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(op @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            if op == b'*' {
                acc = &acc * &rhs;
            } else {
                if rhs.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                acc = &acc / &rhs;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        let mut negate = false;
        while let Some(sign @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            if sign == b'-' {
                negate = !negate;
            }
        }
        let value = self.power()?;
        Ok(if negate { -&value } else { value })
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exp = self.digits()?;
            let exp: u32 = exp
                .try_into()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            return base.pow_i(exp as i64);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Parse(format!(
                        "expected ')' at byte {}",
                        self.pos
                    )));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(RationalFunction::constant(ExactRational::new(
                    n,
                    BigInt::one(),
                )))
            }
            Some(c) => {
                let var = Var::from_symbol(c as char).ok_or_else(|| {
                    Error::Parse(format!("unexpected character '{}'", c as char))
                })?;
                self.pos += 1;
                Ok(RationalFunction::variable(var))
            }
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::Parse(format!("expected digits at byte {start}")));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        text.parse()
            .map_err(|_| Error::Parse(format!("bad integer '{text}'")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_factored_denominators() {
        let f = parse_ratfunc("(2*a^2*t^8+10*a*s^4*t^4-s^8)/(s^3*t*(4*a*t^4+s^4))").unwrap();
        let g = parse_ratfunc("(2*a^2*t^8+10*a*s^4*t^4-s^8)/(4*a*s^3*t^5+s^7*t)").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn precedence_and_signs() {
        assert_eq!(
            parse_ratfunc("1/2*s").unwrap(),
            parse_ratfunc("s/2").unwrap()
        );
        assert_eq!(
            parse_ratfunc("-s^4").unwrap(),
            -&parse_ratfunc("s^4").unwrap()
        );
        assert_eq!(
            parse_ratfunc("- -3").unwrap(),
            parse_ratfunc("3").unwrap()
        );
        // ^ binds tighter than unary minus: -s^4 == -(s^4).
        let m = parse_poly("-s^4").unwrap();
        assert!(m.leading_coefficient() < ExactRational::from_integer(0.into()));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_ratfunc("").is_err());
        assert!(parse_ratfunc("s +").is_err());
        assert!(parse_ratfunc("(s").is_err());
        assert!(parse_ratfunc("x+1").is_err());
        assert!(parse_ratfunc("s^").is_err());
        assert!(parse_ratfunc("s^4 junk").is_err());
        assert_eq!(parse_ratfunc("1/0"), Err(Error::DivisionByZero));
        assert_eq!(parse_ratfunc("1/(s^4-s^4)"), Err(Error::DivisionByZero));
    }

    #[test]
    fn non_polynomial_rejected_by_parse_poly() {
        assert!(parse_poly("1/(s^4-4*a)").is_err());
        assert!(parse_poly("(s^8-16*a^2)/(s^4+4*a)").is_ok());
    }
}
