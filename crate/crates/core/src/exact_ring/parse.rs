//! Polynomial string grammar: integers, `/` rationals, variables
//! `t, x1, x2, x3, y, z`, operators `+ - * ^`, parentheses. Whitespace is
//! insignificant. Division is only allowed by a nonzero rational constant.

use num_traits::Zero;
use thiserror::Error;

use super::base_poly::BasePoly;
use super::rational::Rational;
use super::wpoly::{Var, WPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(num_bigint::BigInt),
    T,
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, PolyParseError> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '(' => out.push((start, Tok::LParen)),
            ')' => out.push((start, Tok::RParen)),
            '0'..='9' => {
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n = s[start..i].parse().unwrap();
                out.push((start, Tok::Num(n)));
                continue;
            }
            't' => out.push((start, Tok::T)),
            'y' => out.push((start, Tok::Var(Var::Y))),
            'z' => out.push((start, Tok::Var(Var::Z))),
            'x' => {
                let v = match b.get(i + 1) {
                    Some(b'1') => Var::X1,
                    Some(b'2') => Var::X2,
                    Some(b'3') => Var::X3,
                    _ => {
                        return Err(PolyParseError {
                            position: start,
                            message: "expected x1, x2 or x3".into(),
                        })
                    }
                };
                i += 2;
                out.push((start, Tok::Var(v)));
                continue;
            }
            _ => {
                return Err(PolyParseError { position: start, message: format!("unexpected character '{c}'") })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyParseError> {
        Err(PolyParseError { position: self.here(), message: msg.to_string() })
    }

    fn expr(&mut self) -> Result<WPoly, PolyParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<WPoly, PolyParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let at = self.here();
                    let d = self.unary()?;
                    let c = constant_of(&d).filter(|c| !c.is_zero()).ok_or(PolyParseError {
                        position: at,
                        message: "division only by a nonzero rational constant".into(),
                    })?;
                    acc = acc.scale_rational(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<WPoly, PolyParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<WPoly, PolyParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let k: u32 = u32::try_from(&n).ok().filter(|&k| k <= 64).ok_or(PolyParseError {
                        position: self.here(),
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(k))
                }
                _ => self.err("expected a nonnegative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<WPoly, PolyParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(WPoly::rational(Rational::from_integer(n)))
            }
            Some(Tok::T) => {
                self.pos += 1;
                Ok(WPoly::constant(BasePoly::t()))
            }
            Some(Tok::Var(v)) => {
                self.pos += 1;
                Ok(WPoly::var(v))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected ')'"),
                }
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn constant_of(p: &WPoly) -> Option<Rational> {
    if p.is_zero() {
        return Some(Rational::zero());
    }
    let (e, c) = p.leading()?;
    (p.len() == 1 && e == [0; 5] && c.is_constant()).then(|| c.constant_term())
}

/// Parses a polynomial in `x1, x2, x3, y, z` with coefficients in `Q[t]`.
pub fn parse_wpoly(s: &str) -> Result<WPoly, PolyParseError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(PolyParseError { position: 0, message: "empty polynomial".into() });
    }
    let mut p = Parser { toks, pos: 0, end: s.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a polynomial in `t` alone.
pub fn parse_base_poly(s: &str) -> Result<BasePoly, PolyParseError> {
    let w = parse_wpoly(s)?;
    if w.is_zero() {
        return Ok(BasePoly::zero());
    }
    match w.leading() {
        Some((e, c)) if w.len() == 1 && e == [0; 5] => Ok(c),
        _ => Err(PolyParseError { position: 0, message: "expected a polynomial in t only".into() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_ring::rational::rat;

    #[test]
    fn parses_base_polys() {
        let p = parse_base_poly("t^2 - 1/2").unwrap();
        assert_eq!(p, BasePoly::from_coeffs(vec![rat(-1, 2), rat(0, 1), rat(1, 1)]));
        assert_eq!(parse_base_poly("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_base_poly(" (t - 1) * (t + 1) ").unwrap().to_string(), "t^2 - 1");
        assert!(parse_base_poly("x1").is_err());
    }

    #[test]
    fn parses_weighted_polys() {
        let p = parse_wpoly("x1^2 - x2*x3 - t^2*y").unwrap();
        assert_eq!(p.to_string(), "x1^2 - x2*x3 - t^2*y");
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = parse_wpoly("(t^2 - 1)*x2 + 3/2*t*y").unwrap();
        assert_eq!(parse_wpoly(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn reports_positions() {
        let e = parse_wpoly("x1 + x4").unwrap_err();
        assert_eq!(e.position, 5);
        let e = parse_wpoly("x1 / x2").unwrap_err();
        assert!(e.message.contains("division"));
        assert!(parse_wpoly("(x1 + y").is_err());
        assert!(parse_wpoly("").is_err());
    }
}
