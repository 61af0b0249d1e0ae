//! Plain-text expression grammar shared by scalars and algebra elements.
//!
//! ```text
//! sum   := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | 'q' | generator | '(' sum ')'
//! ```
//!
//! Generator names are matched longest-first against the list supplied by
//! the caller, so `y-1` is one token for the Podles sphere while `y-1` in an
//! algebra whose only `y`-name is `y` reads as `y - 1`.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen(usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos} in `{input}`: {reason}")]
pub struct ParseError {
    pub input: String,
    pub pos: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Q,
    Gen(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(input: &str, gens: &[&str]) -> Result<Vec<(usize, Tok)>, ParseError> {
    let err = |pos: usize, reason: String| ParseError { input: input.to_string(), pos, reason };
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((i, t));
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = input[start..i].parse().map_err(|_| err(start, "bad integer".into()))?;
            out.push((start, Tok::Int(n)));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let rest = &input[i..];
            let best = gens
                .iter()
                .enumerate()
                .filter(|(_, g)| rest.starts_with(**g))
                .max_by_key(|(_, g)| g.len());
            if let Some((idx, g)) = best {
                out.push((i, Tok::Gen(idx)));
                i += g.len();
                continue;
            }
            if rest.starts_with('q') && !rest[1..].starts_with(|ch: char| ch.is_ascii_alphanumeric()) {
                out.push((i, Tok::Q));
                i += 1;
                continue;
            }
            let end = rest
                .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                .unwrap_or(rest.len());
            return Err(err(i, format!("unknown symbol `{}`", &rest[..end])));
        }
        return Err(err(i, format!("unexpected character `{c}`")));
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.input.len())
    }

    fn fail<T>(&self, reason: &str) -> Result<T, ParseError> {
        Err(ParseError { input: self.input.to_string(), pos: self.here(), reason: reason.to_string() })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let e: i64 = match i64::try_from(&n) {
                    Ok(e) => e,
                    Err(_) => return self.fail("exponent too large"),
                };
                Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
            }
            _ => self.fail("expected integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Q) => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some(Tok::Gen(g)) => {
                self.pos += 1;
                Ok(Expr::Gen(g))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(_) => self.fail("unexpected token"),
            None => self.fail("unexpected end of input"),
        }
    }
}

/// Parses `input` with the given generator names (indices into `gens`
/// become [`Expr::Gen`]).
pub fn parse(input: &str, gens: &[&str]) -> Result<Expr, ParseError> {
    let toks = tokenize(input, gens)?;
    let mut p = Parser { input, toks, pos: 0 };
    if p.peek().is_none() {
        return p.fail("empty expression");
    }
    let e = p.sum()?;
    if p.peek().is_some() {
        return p.fail("trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn longest_generator_match() {
        let podles = ["y-1", "y0", "y1"];
        let e = parse("y1*y-1", &podles).unwrap();
        assert_eq!(e, Expr::Mul(Box::new(Expr::Gen(2)), Box::new(Expr::Gen(0))));
        let smash = ["x", "y"];
        let e = parse("y-1", &smash).unwrap();
        assert_eq!(e, Expr::Sub(Box::new(Expr::Gen(1)), Box::new(Expr::Int(1.into()))));
    }

    #[test]
    fn negative_exponent() {
        let e = parse("q^-2", &[]).unwrap();
        assert_eq!(e, Expr::Pow(Box::new(Expr::Q), -2));
    }

    #[test]
    fn errors_point_at_the_problem() {
        let err = parse("a*w", &["a"]).unwrap_err();
        assert_eq!(err.pos, 2);
        assert!(parse("(q", &[]).is_err());
        assert!(parse("", &[]).is_err());
        assert!(parse("q q", &[]).is_err());
    }
}
