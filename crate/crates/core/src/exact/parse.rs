//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*' factor) | ('/' number))*
//! factor := atom ['^' integer]
//! atom   := number | 'i' | name | '(' expr ')' | '-' atom
//! ```
//!
//! `i` is the imaginary unit and cannot be used as a variable name.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{MultiPoly, Scalar};
use crate::error::Error;

pub fn parse_poly(text: &str, vars: &[String]) -> Result<MultiPoly, Error> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        vars,
    };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.err(&format!("unexpected character '{c}'")));
    }
    Ok(e)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::parse(1, self.pos + 1, msg.to_string())
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, Error> {
        self.skip_ws();
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, Error> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                self.skip_ws();
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(self.err("division only by a nonzero constant"));
                }
                acc = acc.scale(&d.constant_term().inv().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, Error> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected integer exponent"));
            }
            let s: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = s.parse().map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, Error> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of expression")),
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = s.parse().map_err(|_| self.err("bad integer"))?;
                Ok(MultiPoly::constant(Scalar::from(BigRational::from_integer(n))))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_alphanumeric() || c == '_' || c == '\'')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                if name == "i" {
                    return Ok(MultiPoly::constant(Scalar::i()));
                }
                match self.vars.iter().position(|v| *v == name) {
                    Some(k) => Ok(MultiPoly::var(k)),
                    None => {
                        self.pos = start;
                        Err(self.err(&format!("unknown variable '{name}'")))
                    }
                }
            }
            Some(c) => Err(self.err(&format!("unexpected character '{c}'"))),
        }
    }
}

/// Convenience: parses and returns a scalar, used in tests and file formats.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let p = parse_poly(text, &[])?;
    if !p.is_constant() {
        return Err(Error::parse(1, 1, format!("not a scalar: {text}")));
    }
    Ok(p.constant_term())
}
