//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ['^' nat]
//! base     := rational | 'x' | 'y' | '(' expr ')'
//! rational := nat ['/' nat]
//! ```
//!
//! Whitespace is insignificant. Multiplication must be written explicitly.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at byte {pos} is not a natural number")]
    BadExponent { pos: usize },
    #[error("zero denominator at byte {pos}")]
    ZeroDenominator { pos: usize },
}

pub fn parse_poly(text: &str) -> Result<Poly, ParseError> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let p = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(p)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn syntax(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let negate = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc * self.factor()?;
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'x' || c == b'y' || c == b'(' => {
                Err(self.syntax("implicit multiplication is not allowed; write '*'"))
            }
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.base()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(ParseError::BadExponent { pos: start });
        }
        let e: u32 = digits
            .parse()
            .map_err(|_| ParseError::BadExponent { pos: start })?;
        // "x^2.5" or "x^2/3" would otherwise surface as a confusing syntax error.
        if matches!(self.src.get(self.pos), Some(b'.') | Some(b'/')) {
            return Err(ParseError::BadExponent { pos: start });
        }
        Ok(base.pow(e))
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn base(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some(b'y') => {
                self.pos += 1;
                Ok(Poly::y())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.rational().map(Poly::constant),
            Some(_) => Err(self.syntax("expected a number, 'x', 'y' or '('")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num: BigInt = self.digits().parse().expect("digits");
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        let den = self.digits();
        if den.is_empty() {
            return Err(self.syntax("expected a denominator after '/'"));
        }
        let den: BigInt = den.parse().expect("digits");
        if den.is_zero() {
            return Err(ParseError::ZeroDenominator { pos: start });
        }
        Ok(Rational::new(num, den))
    }
}
