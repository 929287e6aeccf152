//! Recursive-descent parser for the polynomial grammar:
//!
//! ```text
//! expr   := ('-')? term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' uint)?
//! atom   := int | 'p' | ident | '(' expr ')'
//! ```
//!
//! Identifiers are `[A-Za-z][A-Za-z0-9_]*`; the token `p` is reserved and
//! expands to the context prime. A leading minus is accepted so that every
//! printed polynomial re-parses.

use num_bigint::BigInt;

use crate::context::RingContext;
use crate::error::{Error, Result};
use crate::poly::Polynomial;

const MAX_DEPTH: u32 = 128;

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
    depth: u32,
    ctx: &'a RingContext,
}

pub fn parse_poly(text: &str, ctx: &RingContext) -> Result<Polynomial> {
    let mut p = Parser {
        input: text,
        bytes: text.as_bytes(),
        pos: 0,
        depth: 0,
        ctx,
    };
    p.skip_ws();
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("trailing input"));
    }
    Ok(poly)
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("expression nested too deeply"));
        }
        self.skip_ws();
        let negate = self.eat(b'-');
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.eat(b'*') {
                let f = self.factor()?;
                acc = acc.mul(&f)?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            if self.peek() == Some(b'-') {
                return Err(Error::NegativeExponent);
            }
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                Ok(Polynomial::constant(
                    self.ctx,
                    self.ctx.domain().from_int(BigInt::from(n)),
                ))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let ident = self.ident();
                if ident == "p" {
                    Ok(Polynomial::constant(
                        self.ctx,
                        self.ctx.domain().from_int(BigInt::from(self.ctx.prime())),
                    ))
                } else {
                    Polynomial::variable(self.ctx, &ident)
                }
            }
            _ => Err(self.err("expected integer, variable, `p`, or `(`")),
        }
    }

    fn uint(&mut self) -> Result<u128> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an unsigned integer"));
        }
        self.input[start..self.pos]
            .parse::<u128>()
            .map_err(|_| self.err("integer literal too large"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        self.pos += 1;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        self.input[start..self.pos].to_string()
    }
}


#[cfg(test)]
mod depth_tests {
    use super::*;
    use crate::coeff::CoefficientDomain;

    #[test]
    fn deep_nesting_is_rejected_not_crashed() {
        let ctx = RingContext::new(vec!["X".into()], CoefficientDomain::IntegerZ, 2).unwrap();
        let deep = format!("{}X{}", "(".repeat(4000), ")".repeat(4000));
        assert!(matches!(parse_poly(&deep, &ctx), Err(Error::Syntax { .. })));
        // moderate nesting still parses
        let fine = format!("{}X{}", "(".repeat(60), ")".repeat(60));
        assert!(parse_poly(&fine, &ctx).is_ok());
    }
}
