//! Recursive-descent parser for germ and family expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor ("*"? factor)*       juxtaposition means product
//! factor := atom ("^" uint)?
//! atom   := "x" | "y" | "s" | number | "(" expr ")" | "-" atom
//! number := uint ("/" uint)?
//! ```
//!
//! Note that unary minus lives at the atom level, so `-x^2` is `(-x)^2`;
//! rendered output always writes an explicit coefficient where this matters.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Exponent, ParamPolynomial, UniPoly};
use crate::error::{Error, Result};

/// Largest accepted exponent; guards the lattice arithmetic downstream.
pub const MAX_EXPONENT: u64 = 1_000_000;

/// Parses an expression into a fully expanded canonical [`ParamPolynomial`].
///
/// Input without `s` yields a family whose coefficients are constant; use
/// [`ParamPolynomial::to_germ`] to obtain the plain germ.
pub fn parse(text: &str) -> Result<ParamPolynomial> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let value = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_expr(&mut self) -> Result<ParamPolynomial> {
        let mut acc = self.parse_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = acc.add(&rhs);
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    acc = acc.sub(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<ParamPolynomial> {
        let mut acc = self.parse_factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    acc = acc.mul(&rhs);
                }
                // Juxtaposition: a new factor may start here, but a bare
                // "-" always belongs to the enclosing expression.
                Some(b'x') | Some(b'y') | Some(b's') | Some(b'(') => {
                    let rhs = self.parse_factor()?;
                    acc = acc.mul(&rhs);
                }
                Some(b) if b.is_ascii_digit() => {
                    let rhs = self.parse_factor()?;
                    acc = acc.mul(&rhs);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<ParamPolynomial> {
        let atom = self.parse_atom()?;
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let exp = self.parse_exponent()?;
            return Ok(atom.pow(exp));
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<ParamPolynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(ParamPolynomial::monomial(Exponent::new(1, 0), UniPoly::one()))
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(ParamPolynomial::monomial(Exponent::new(0, 1), UniPoly::one()))
            }
            Some(b's') => {
                self.pos += 1;
                Ok(ParamPolynomial::monomial(
                    Exponent::new(0, 0),
                    UniPoly::variable(),
                ))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.parse_atom()?.neg())
            }
            Some(b) if b.is_ascii_digit() => {
                let numer = self.parse_uint()?;
                self.skip_ws();
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let start = self.pos;
                    let denom = self.parse_uint()?;
                    if denom.is_zero() {
                        self.pos = start;
                        return Err(self.error("zero denominator in rational literal"));
                    }
                    BigRational::new(numer, denom)
                } else {
                    BigRational::from_integer(numer)
                };
                Ok(ParamPolynomial::monomial(
                    Exponent::new(0, 0),
                    UniPoly::constant(value),
                ))
            }
            Some(_) => Err(self.error("expected 'x', 'y', 's', a number, '(' or '-'")),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an unsigned integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("digit string parses"))
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Err(self.error("expected a non-negative integer exponent"));
        }
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: u64 = digits.parse().map_err(|_| Error::Syntax {
            offset: start,
            message: "exponent too large".to_string(),
        })?;
        if value > MAX_EXPONENT {
            return Err(Error::Syntax {
                offset: start,
                message: "exponent too large".to_string(),
            });
        }
        Ok(value as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn e(i: u32, j: u32) -> Exponent {
        Exponent::new(i, j)
    }

    #[test]
    fn parses_plain_germ() {
        let f = parse("x^4 - y^3").unwrap().to_germ().unwrap();
        assert_eq!(f.coeff(&e(4, 0)), rat(1));
        assert_eq!(f.coeff(&e(0, 3)), rat(-1));
        assert_eq!(f.support().len(), 2);
    }

    #[test]
    fn expands_family() {
        // x^4 - (y^2 + s x)^2 = x^4 - y^4 - 2s x y^2 - s^2 x^2
        let f = parse("x^4 - (y^2 + s*x)^2").unwrap();
        let terms: Vec<_> = f.terms().collect();
        assert_eq!(terms.len(), 4);
        assert_eq!(f.substitute(&rat(1)).coeff(&e(1, 2)), rat(-2));
        assert_eq!(f.substitute(&rat(1)).coeff(&e(2, 0)), rat(-1));
    }

    #[test]
    fn rejects_negative_exponent() {
        let err = parse("x^(-1)").unwrap_err();
        match err {
            Error::Syntax { offset, .. } => assert_eq!(offset, 2),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse("x^y").is_err());
        assert!(parse("x^-1").is_err());
    }

    #[test]
    fn juxtaposition_multiplies() {
        let f = parse("2x y^2").unwrap().to_germ().unwrap();
        assert_eq!(f.coeff(&e(1, 2)), rat(2));
        // "x - y" stays a difference: "-" never starts a juxtaposed factor
        let g = parse("x - y").unwrap().to_germ().unwrap();
        assert_eq!(g.coeff(&e(0, 1)), rat(-1));
        // after an explicit "*", a negated atom is allowed
        let h = parse("x * -y").unwrap().to_germ().unwrap();
        assert_eq!(h.coeff(&e(1, 1)), rat(-1));
    }

    #[test]
    fn rational_literals() {
        let f = parse("1/2 x^2 - 3/4").unwrap().to_germ().unwrap();
        assert_eq!(f.coeff(&e(2, 0)), BigRational::new(1.into(), 2.into()));
        assert_eq!(f.coeff(&e(0, 0)), BigRational::new((-3).into(), 4.into()));
        assert!(parse("1/0").is_err());
    }

    #[test]
    fn unary_minus_binds_before_caret() {
        // Grammar: factor := atom ("^" uint)?, atom := "-" atom, so
        // -x^2 is (-x)^2 = x^2 and -2^2 is (-2)^2 = 4.
        let f = parse("-x^2").unwrap().to_germ().unwrap();
        assert_eq!(f.coeff(&e(2, 0)), rat(1));
        let g = parse("-x^3").unwrap().to_germ().unwrap();
        assert_eq!(g.coeff(&e(3, 0)), rat(-1));
        let c = parse("-2^2").unwrap().to_germ().unwrap();
        assert_eq!(c.coeff(&e(0, 0)), rat(4));
    }

    #[test]
    fn error_positions() {
        assert!(matches!(
            parse("x +").unwrap_err(),
            Error::Syntax { offset: 3, .. }
        ));
        assert!(matches!(
            parse("x + )").unwrap_err(),
            Error::Syntax { offset: 4, .. }
        ));
        assert!(matches!(
            parse("(x + y").unwrap_err(),
            Error::Syntax { .. }
        ));
        assert!(matches!(parse("").unwrap_err(), Error::Syntax { .. }));
        assert!(matches!(parse("x$").unwrap_err(), Error::Syntax { .. }));
    }

    #[test]
    fn rejects_oversized_exponents() {
        assert!(matches!(
            parse("x^1000001").unwrap_err(),
            Error::Syntax { offset: 2, .. }
        ));
        assert!(parse("x^1000000").is_ok());
    }

    #[test]
    fn parse_zero_and_constants() {
        assert!(parse("0").unwrap().is_zero());
        let c = parse("7").unwrap().to_germ().unwrap();
        assert_eq!(c.coeff(&e(0, 0)), rat(7));
        let one = parse("x^0").unwrap().to_germ().unwrap();
        assert!(one.coeff(&e(0, 0)).is_one());
    }
}
