//! Text form of polynomials.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := INT ['/' INT] | IDENT ['^' INT]
//! ```
//!
//! Multiplication must be written out; `2X` and `XY` are rejected (the
//! latter is read as the single identifier `XY`).

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;

use super::field::Coeff;
use super::monomial::Monomial;
use super::polynomial::{Polynomial, Ring};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digits parse"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn factor(&mut self, coeff: &mut Coeff, mono: &mut Monomial) -> Result<()> {
        let field = self.ring.field();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let value = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let at = self.pos;
                    let den = self.integer()?;
                    field.from_ratio(&num, &den).map_err(|_| Error::Syntax {
                        pos: at,
                        msg: "zero denominator".into(),
                    })?
                } else {
                    field.from_bigint(&num)
                };
                *coeff = coeff.mul(&value);
                Ok(())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let at = self.pos;
                let name = self.ident();
                let idx = self
                    .ring
                    .var_index(&name)
                    .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                let mut power = 1u32;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let p = self.integer()?;
                    power = u32::try_from(p).map_err(|_| Error::Syntax {
                        pos: at,
                        msg: "exponent too large".into(),
                    })?;
                }
                *mono = mono.mul(&Monomial::var_pow(idx, power));
                Ok(())
            }
            Some(c) => self.err(format!("unexpected character {:?}", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    fn term(&mut self, negative: bool) -> Result<(Coeff, Monomial)> {
        let field = self.ring.field();
        let mut coeff = if negative {
            field.from_i64(-1)
        } else {
            field.one()
        };
        let mut mono = Monomial::one();
        self.factor(&mut coeff, &mut mono)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut coeff, &mut mono)?;
        }
        Ok((coeff, mono))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push(self.term(negative)?);
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                None => break,
                Some(c) => return self.err(format!("unexpected character {:?}", c as char)),
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

/// Parses a polynomial in `ring`.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    p.poly()
}

/// Parses a `;`-separated list of polynomials.
pub fn parse_poly_list(text: &str, ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    text.split(';')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_poly(s, ring))
        .collect()
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial, ring: &Ring) -> fmt::Result {
    let mut first = true;
    for (i, name) in ring.var_names().iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            f.write_str(name)?;
        } else {
            write!(f, "{name}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, t) in self.terms().iter().enumerate() {
            let negative = t.coeff.is_negative();
            let abs = if negative {
                t.coeff.neg()
            } else {
                t.coeff.clone()
            };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.mono.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, &t.mono, self.ring())?;
            }
        }
        Ok(())
    }
}
