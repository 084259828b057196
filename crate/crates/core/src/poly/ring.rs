use std::fmt::Write;

use num_traits::Zero;
use thiserror::Error;

use super::monomial::{Monomial, MonomialOrder, MAX_VARS};
use super::multipoly::MultiPoly;
use crate::scalar::{Field, Rational};

/// Named variables plus a term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unexpected input at byte {0}")]
    Unexpected(usize),
    #[error("unexpected end of input")]
    Eof,
}

impl Ring {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>, order: MonomialOrder) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(names.len() <= MAX_VARS, "too many variables");
        Ring { names, order }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var<F: Field>(&self, i: usize) -> MultiPoly<F> {
        MultiPoly::var(i, self.nvars(), self.order)
    }

    pub fn named<F: Field>(&self, name: &str) -> MultiPoly<F> {
        let i = self.index_of(name).unwrap_or_else(|| panic!("no variable {name}"));
        self.var(i)
    }

    pub fn zero<F: Field>(&self) -> MultiPoly<F> {
        MultiPoly::zero(self.nvars(), self.order)
    }

    pub fn constant<F: Field>(&self, c: F) -> MultiPoly<F> {
        MultiPoly::constant(c, self.nvars(), self.order)
    }

    pub fn monomial_text(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (k, name) in self.names.iter().enumerate() {
            match m.exponent(k) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text: terms in decreasing term order, `c*x^e*y` with unit
    /// coefficients suppressed.
    pub fn to_text<F: Field>(&self, p: &MultiPoly<F>) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let negative = c.is_negative_real();
            let mag = if negative { -c.clone() } else { c.clone() };
            if k == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_text());
            } else if mag.is_one() {
                out.push_str(&self.monomial_text(m));
            } else {
                let _ = write!(out, "{}*{}", mag.to_text(), self.monomial_text(m));
            }
        }
        out
    }

    /// Parses sums of products of integers, `p/q`, `i`, variables,
    /// parenthesised subexpressions and `^` powers.
    pub fn parse<F: Field>(&self, text: &str) -> Result<MultiPoly<F>, ParseError> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0, imag: None };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(ParseError::Unexpected(p.pos));
        }
        Ok(out)
    }

    /// Like [`Ring::parse`], accepting the imaginary unit `i`.
    pub fn parse_with_imag<F: Field>(&self, text: &str, imag: F) -> Result<MultiPoly<F>, ParseError> {
        let mut p = Parser { ring: self, src: text.as_bytes(), pos: 0, imag: Some(imag) };
        let out = p.sum()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(ParseError::Unexpected(p.pos));
        }
        Ok(out)
    }
}

struct Parser<'a, F> {
    ring: &'a Ring,
    src: &'a [u8],
    pos: usize,
    imag: Option<F>,
}

impl<F: Field> Parser<'_, F> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => break,
            };
            first = false;
            let t = self.product()?;
            acc = if sign { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<MultiPoly<F>, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            let e: u32 = e.parse().map_err(|_| ParseError::Unexpected(self.pos))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(if self.pos == self.src.len() { ParseError::Eof } else { ParseError::Unexpected(self.pos) });
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn atom(&mut self) -> Result<MultiPoly<F>, ParseError> {
        match self.peek() {
            None => Err(ParseError::Eof),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::Unexpected(self.pos));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut value: Rational = n.parse().map_err(|_| ParseError::Unexpected(self.pos))?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d: Rational = self.integer()?.parse().map_err(|_| ParseError::Unexpected(self.pos))?;
                    if d.is_zero() {
                        return Err(ParseError::Unexpected(self.pos));
                    }
                    value /= d;
                }
                Ok(self.ring.constant(F::from_rational(&value)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                if let Some(k) = self.ring.index_of(&name) {
                    return Ok(self.ring.var(k));
                }
                match (&self.imag, name.as_str()) {
                    (Some(i), "i") => Ok(self.ring.constant(i.clone())),
                    _ => Err(ParseError::UnknownVariable(name)),
                }
            }
            Some(_) => Err(ParseError::Unexpected(self.pos)),
        }
    }
}

impl<F: Field> MultiPoly<F> {
    /// True iff the polynomial is `c * v^e` for a nonzero constant `c`.
    pub fn is_pure_power_of(&self, var: usize, e: u16) -> bool {
        self.is_monomial() && self.terms()[0].0 == Monomial::var_pow(var, e)
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms()[0].1.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{gauss, imag_unit, GaussRational};

    #[test]
    fn text_round_trip() {
        let r = Ring::new(["x", "y", "z"], MonomialOrder::Grevlex);
        let p: MultiPoly<Rational> = r.parse("3*x^2*y - y^3 + 1/2*z - 7").unwrap();
        let text = r.to_text(&p);
        assert_eq!(text, "3*x^2*y - y^3 + 1/2*z - 7");
        assert_eq!(r.parse::<Rational>(&text).unwrap(), p);
    }

    #[test]
    fn gaussian_text_round_trip() {
        let r = Ring::new(["x1", "x2"], MonomialOrder::Grevlex);
        let p: MultiPoly<GaussRational> = r.parse_with_imag("(1+2*i)*x1^2 - i*x2 + 3", imag_unit()).unwrap();
        let text = r.to_text(&p);
        assert_eq!(text, "(1+2*i)*x1^2 - i*x2 + 3");
        assert_eq!(r.parse_with_imag(&text, imag_unit()).unwrap(), p);
        assert_eq!(p.coeff(&Monomial::var(1)), gauss(0, -1));
    }

    #[test]
    fn unknown_names_are_rejected() {
        let r = Ring::new(["x"], MonomialOrder::Lex);
        assert_eq!(r.parse::<Rational>("x + q"), Err(ParseError::UnknownVariable("q".into())));
        assert!(r.parse::<Rational>("x +").is_err());
    }
}
