//! Parser for expressions such as `x1*d1*g2 + (1/2)*g1`.
//!
//! Atoms: integers, `c`, `xN` (`x^N`), `dN` (`∂_N`), `gN` (`γ^N`) with 1-based
//! `N`, and the embedded generators `X`, `Y`, `H`, `E`, `F`. Operators: `+`,
//! `-`, `*`, `/` (by a scalar only), `^` (non-negative integer powers) and
//! parentheses.

use std::sync::Arc;

use super::{Osp, WCElement};
use crate::clifford::Metric;
use crate::error::Error;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            toks.push(Tok::Num(text.parse()?));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            toks.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(ch) {
            toks.push(Tok::Op(ch));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{ch}`")));
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    metric: &'a Arc<Metric>,
    osp: Option<Osp>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<WCElement, Error> {
        let mut acc = if self.eat('-') {
            -&self.term()?
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

    fn term(&mut self) -> Result<WCElement, Error> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let rhs = self.power()?;
                let s = as_scalar(&rhs).ok_or_else(|| Error::Parse("can only divide by a scalar".into()))?;
                acc = acc.scale(&s.inv()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<WCElement, Error> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                let k = k.to_i64().filter(|&k| (0..=64).contains(&k)).ok_or_else(|| {
                    Error::Parse("exponent must be an integer between 0 and 64".into())
                })?;
                Ok(base.pow(k as u32))
            }
            _ => Err(Error::Parse("expected an integer exponent after `^`".into())),
        }
    }

    fn atom(&mut self) -> Result<WCElement, Error> {
        let tok = self.toks.get(self.pos).cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Num(r) => Ok(WCElement::scalar(self.metric, r.into())),
            Tok::Op('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                Ok(e)
            }
            Tok::Op(op) => Err(Error::Parse(format!("unexpected `{op}`"))),
            Tok::Ident(name) => self.ident(&name),
        }
    }

    fn ident(&mut self, name: &str) -> Result<WCElement, Error> {
        let m = self.metric;
        if name == "c" {
            return Ok(WCElement::scalar(m, Scalar::c()));
        }
        if ["X", "Y", "H", "E", "F"].contains(&name) {
            let o = self.osp.get_or_insert_with(|| Osp::new(m));
            return Ok(match name {
                "X" => o.x.clone(),
                "Y" => o.y.clone(),
                "H" => o.h.clone(),
                "E" => o.e.clone(),
                _ => o.f.clone(),
            });
        }
        let (head, digits) = name.split_at(1);
        let idx: usize = digits.parse().map_err(|_| Error::Parse(format!("unknown symbol `{name}`")))?;
        if idx == 0 || idx > m.n() {
            return Err(Error::IndexOutOfRange { index: idx, n: m.n() });
        }
        match head {
            "x" => WCElement::x(m, idx - 1),
            "d" => WCElement::d(m, idx - 1),
            "g" => WCElement::gamma(m, idx - 1),
            _ => Err(Error::Parse(format!("unknown symbol `{name}`"))),
        }
    }
}

fn as_scalar(e: &WCElement) -> Option<Scalar> {
    match e.terms().iter().next() {
        None => Some(Scalar::zero()),
        Some((m, c)) if e.len() == 1 && m.is_one() => Some(c.clone()),
        _ => None,
    }
}

/// Parses an expression over the given metric.
pub fn parse_wc(input: &str, metric: &Arc<Metric>) -> Result<WCElement, Error> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, metric, osp: None };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos + 1)));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_spec_style_input() {
        let m = Metric::euclidean(2).unwrap();
        let e = parse_wc("x1*d1*g2 + (1/2)*g1", &m).unwrap();
        let expected = &(&WCElement::x(&m, 0).unwrap() * &WCElement::d(&m, 0).unwrap())
            * &WCElement::gamma(&m, 1).unwrap();
        let expected = &expected + &WCElement::gamma(&m, 0).unwrap().scale(&Scalar::frac(1, 2));
        assert_eq!(e, expected);
    }

    #[test]
    fn rendering_parses_back() {
        let m = Metric::lorentzian(3).unwrap();
        let e = parse_wc("(d1 + c*x2)^2 * g3*g1 - 3/4 + (1 - 2*c)*x3*d3", &m).unwrap();
        assert_eq!(parse_wc(&e.to_string(), &m).unwrap(), e);
    }

    #[test]
    fn named_generators() {
        let m = Metric::euclidean(3).unwrap();
        assert_eq!(parse_wc("X*X - E", &m).unwrap(), WCElement::zero(&m));
    }

    #[test]
    fn rejects_bad_input() {
        let m = Metric::euclidean(2).unwrap();
        assert!(parse_wc("x3", &m).is_err());
        assert!(parse_wc("x1 / x2", &m).is_err());
        assert!(parse_wc("(x1", &m).is_err());
        assert!(parse_wc("q1", &m).is_err());
        assert!(parse_wc("", &m).is_err());
    }
}
