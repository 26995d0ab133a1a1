use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, Monomial, Poly, Ring};
use crate::error::{Error, Result};

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    chars: Vec<char>,
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: 1, msg: format!("column {}: {}", self.pos + 1, msg.into()) }
    }

    fn ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.chars.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let neg = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.product()?;
            acc = if neg { self.ring.sub(&acc, &t) } else { self.ring.add(&acc, &t) };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly<F::Elem>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                }
                // implicit multiplication: `2x`, `x(y+z)`
                Some(c) if c.is_alphanumeric() || c == '(' || c == '_' => {}
                _ => break,
            }
            let f = self.power()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly<F::Elem>> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = digits.parse().map_err(|_| self.err("expected an exponent"))?;
            return Ok(self.ring.pow(&base, e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly<F::Elem>> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let mut q = BigRational::from_integer(digits.parse::<BigInt>().unwrap());
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.ws();
                    let s2 = self.pos;
                    while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let d: String = self.chars[s2..self.pos].iter().collect();
                    let d: BigInt = d.parse().map_err(|_| self.err("expected a denominator"))?;
                    if d == BigInt::from(0) {
                        return Err(self.err("division by zero"));
                    }
                    q /= BigRational::from_integer(d);
                }
                Ok(self.ring.constant(self.ring.coef(&q)?))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let i = self
                    .ring
                    .names()
                    .iter()
                    .position(|n| *n == name)
                    .ok_or_else(|| self.err(format!("unknown variable `{name}`")))?;
                Ok(self.ring.monomial(Monomial::var(self.ring.nvars(), i)))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl<F: Field> Ring<F> {
    /// Parse `x^2*y - 3y z + (x+w)^3`; rational constants `a/b` are allowed.
    pub fn parse(&self, text: &str) -> Result<Poly<F::Elem>> {
        let mut p = Parser { ring: self, chars: text.chars().collect(), pos: 0 };
        let f = p.sum()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(f)
    }
}
