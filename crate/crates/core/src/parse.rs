//! Text syntax for polynomials.
//!
//! Integer or rational coefficients (`3`, `-7/2`), ring variables, `+ - * ^`
//! and parentheses for grouping. Implicit multiplication is rejected:
//! `2 x1` is an error, `2*x1` is required.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{ParseError, Result};
use crate::poly::{Coeff, Polynomial};
use crate::ring::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    /// 1-based column offsets for error reporting.
    col_base: usize,
    line: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str, line: usize, col_base: usize) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, col_base, line }
    }

    fn err(&self, at: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col_base + at, msg)
    }

    fn tokens(&mut self) -> std::result::Result<Vec<(Tok, usize)>, ParseError> {
        let mut out = Vec::new();
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            let at = self.pos;
            match c {
                b' ' | b'\t' => {
                    self.pos += 1;
                }
                b'+' => {
                    out.push((Tok::Plus, at));
                    self.pos += 1;
                }
                b'-' => {
                    out.push((Tok::Minus, at));
                    self.pos += 1;
                }
                b'*' => {
                    out.push((Tok::Star, at));
                    self.pos += 1;
                }
                b'^' => {
                    out.push((Tok::Caret, at));
                    self.pos += 1;
                }
                b'/' => {
                    out.push((Tok::Slash, at));
                    self.pos += 1;
                }
                b'(' => {
                    out.push((Tok::LParen, at));
                    self.pos += 1;
                }
                b')' => {
                    out.push((Tok::RParen, at));
                    self.pos += 1;
                }
                b'0'..=b'9' => {
                    let start = self.pos;
                    while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Int(text.parse().unwrap()), at));
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                    out.push((Tok::Ident(text.to_string()), at));
                }
                other => {
                    return Err(self.err(at, format!("unexpected character `{}`", other as char)));
                }
            }
        }
        Ok(out)
    }
}

struct Parser<'a> {
    ring: &'a Ring,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    col_base: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn at(&self) -> usize {
        self.toks.get(self.pos).map(|(_, a)| *a).unwrap_or(self.end)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col_base + self.at(), msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok, what: &str) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {what}")))
        }
    }

    // poly := ["+"|"-"] term (("+"|"-") term)*
    fn poly(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let mut neg = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            neg = true;
        } else if self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
        }
        let first = self.term()?;
        let mut acc = if neg { first.neg() } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t).expect("same ring");
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t).expect("same ring");
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ("*" factor)*
    fn term(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f).expect("same ring");
                }
                // Implicit multiplication (two adjacent atoms) is forbidden.
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(self.err("implicit multiplication is forbidden; use `*`"));
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // factor := atom ("^" uint)?
    fn factor(&mut self) -> std::result::Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    Ok(base.pow(e).expect("same ring"))
                }
                _ => Err(self.err("expected integer exponent after `^`")),
            }
        } else {
            Ok(base)
        }
    }

    // atom := rational | ident | "(" poly ")"
    fn atom(&mut self) -> std::result::Result<Polynomial, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                // rational := int ("/" uint)?
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(Polynomial::constant(
                            self.ring,
                            BigRational::new(n, d),
                        )),
                        Some(Tok::Int(_)) => Err(self.err("zero denominator")),
                        _ => Err(self.err("expected denominator after `/`")),
                    }
                } else {
                    Ok(Polynomial::constant(self.ring, Coeff::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                let at = self.at();
                self.pos += 1;
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(ParseError::new(
                        self.line,
                        self.col_base + at,
                        format!("unknown variable `{name}`"),
                    )),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.poly()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            _ => Err(self.err("expected a coefficient, variable or `(`")),
        }
    }
}

/// Parses polynomial text in the given ring. `line` and `col_base` locate
/// the text inside a larger source for error positions.
pub fn parse_polynomial_at(ring: &Ring, text: &str, line: usize, col_base: usize) -> Result<Polynomial> {
    let mut lexer = Lexer::new(text, line, col_base);
    let toks = lexer.tokens()?;
    let mut parser = Parser { ring, toks, pos: 0, line, col_base, end: text.len() };
    let p = parser.poly()?;
    if parser.pos < parser.toks.len() {
        return Err(parser.err("unexpected trailing input").into());
    }
    Ok(p)
}

pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, text, 1, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_canonical_text() {
        let r = Ring::standard(3);
        let texts = [
            "-2 + x1^2 + x2^2 + x3^2 - 2*x1*x2*x3",
            "0",
            "1/3 - 7/2*x1",
            "x1",
            "76 - x2 - 2*x1*x3 + 4*x1^2*x2",
        ];
        for t in texts {
            let p = parse_polynomial(&r, t).unwrap();
            assert_eq!(p.to_string(), t);
            assert_eq!(parse_polynomial(&r, &p.to_string()).unwrap(), p);
        }
    }

    #[test]
    fn parens_and_powers() {
        let r = Ring::standard(2);
        let p = parse_polynomial(&r, "(x1 + x2)^2 - x1^2 - x2^2").unwrap();
        assert_eq!(p.to_string(), "2*x1*x2");
    }

    #[test]
    fn implicit_multiplication_rejected() {
        let r = Ring::standard(2);
        let e = parse_polynomial(&r, "2 x1").unwrap_err();
        assert!(e.to_string().contains("implicit multiplication"));
    }

    #[test]
    fn unknown_variable_rejected() {
        let r = Ring::standard(2);
        let e = parse_polynomial(&r, "x1 + x7").unwrap_err();
        assert!(e.to_string().contains("unknown variable `x7`"));
    }

    #[test]
    fn reserved_names_parse_by_display_name() {
        let r = Ring::standard(1).extend(vec!["__t"]);
        let p = parse_polynomial(&r, "x1 - t").unwrap();
        assert_eq!(p.to_string(), "x1 - t");
    }

    #[test]
    fn error_positions() {
        let r = Ring::standard(2);
        let e = parse_polynomial(&r, "x1 + ").unwrap_err();
        assert_eq!(e.to_string(), "parse error at 1:6: expected a coefficient, variable or `(`");
    }
}
