//! Expression-string parser.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    = term { ("+" | "-") term } ;
//! term    = unary { ("*" | "/") unary } ;
//! unary   = ("-" | "+") unary | power ;
//! power   = primary [ "^" integer ] ;
//! primary = integer | ident | "(" expr ")" ;
//! integer = digit { digit } ;
//! ident   = letter { letter | digit | "_" } ;
//! ```
//!
//! Division is only allowed by a nonzero constant, so `a/b` literals and
//! `x1/2` both denote rational scalings.

use super::poly::{Poly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

struct Parser<'a> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn syntax<T>(&self, message: impl Into<String>, position: usize) -> Result<T> {
        Err(Error::SyntaxError {
            message: message.into(),
            position,
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            if c == b'+' {
                acc += rhs;
            } else {
                acc -= rhs;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            let at = self.pos;
            self.pos += 1;
            let rhs = self.unary()?;
            if c == b'*' {
                acc = acc * rhs;
            } else {
                match rhs.as_constant() {
                    Some(d) if !d.is_zero() => acc = acc.scale(&(Rational::from_integer(1.into()) / d)),
                    Some(_) => return self.syntax("division by zero", at),
                    None => return self.syntax("division by a non-constant expression", at),
                }
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return self.syntax("expected a non-negative integer exponent", at);
            }
            let e: u32 = match digits.parse() {
                Ok(e) => e,
                Err(_) => return self.syntax("exponent too large", at),
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn primary(&mut self) -> Result<Poly> {
        let at = match self.peek() {
            Some(_) => self.pos,
            None => return self.syntax("unexpected end of expression", self.pos),
        };
        let c = self.bytes[at];
        if c.is_ascii_digit() {
            let digits = self.digits();
            let n: BigInt = digits.parse().expect("digit run parses");
            return Ok(Poly::constant(Rational::from_integer(n)));
        }
        if c.is_ascii_alphabetic() {
            while self.pos < self.bytes.len()
                && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = &self.src[at..self.pos];
            return match self.names.iter().position(|n| n == name) {
                Some(v) => Ok(Poly::var(v)),
                None => Err(Error::UnknownVariable {
                    name: name.to_string(),
                    position: at,
                }),
            };
        }
        if c == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return self.syntax("expected `)`", self.pos);
            }
            self.pos += 1;
            return Ok(inner);
        }
        let ch = self.src[at..].chars().next().unwrap_or('?');
        self.syntax(format!("unexpected character `{ch}`"), at)
    }
}

/// Parses an expression over the variable universe `names`.
///
/// Positions in errors are byte offsets into `expr`.
pub fn parse(expr: &str, names: &[String]) -> Result<Poly> {
    let mut p = Parser {
        src: expr,
        bytes: expr.as_bytes(),
        pos: 0,
        names,
    };
    let out = p.expr()?;
    if p.peek().is_some() {
        let at = p.pos;
        let ch = expr[at..].chars().next().unwrap_or('?');
        return Err(Error::SyntaxError {
            message: format!("unexpected character `{ch}`"),
            position: at,
        });
    }
    Ok(out)
}
