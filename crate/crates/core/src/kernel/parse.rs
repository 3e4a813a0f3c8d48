//! Text grammar for polynomials: integers, `/` for rationals, variables
//! `x0..xN` (or `xk_j` in join rings), `+ - * ^` and parentheses.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Poly, PolyRing, ProjPoint, Scalar, VarNaming};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(col: usize, msg: impl Into<String>) -> Error {
    Error::Parse { col, msg: msg.into() }
}

fn lex(ring: &PolyRing, text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let col = i + 1;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().map_err(|_| err(col, "bad integer"))?;
                out.push((Tok::Num(n), col));
            }
            b'x' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(col, "expected variable index after 'x'"));
                }
                let k: usize = text[start..i].parse().map_err(|_| err(col, "bad variable index"))?;
                let idx = if i < bytes.len() && bytes[i] == b'_' {
                    i += 1;
                    let bstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let j: usize = text[bstart..i].parse().map_err(|_| err(col, "bad block index"))?;
                    match ring.naming() {
                        VarNaming::Blocked { block_len } if j >= 1 && k < block_len => (j - 1) * block_len + k,
                        _ => return Err(err(col, format!("variable x{}_{} not in ring", k, j))),
                    }
                } else {
                    match ring.naming() {
                        VarNaming::Plain => k,
                        VarNaming::Blocked { .. } => {
                            return Err(err(col, "join rings use blocked names xk_j"));
                        }
                    }
                };
                if idx >= ring.nvars() {
                    return Err(err(col, format!("variable index {} out of range for {} variables", idx, ring.nvars())));
                }
                out.push((Tok::Var(idx), col));
            }
            b'+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            b'-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            b'/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            b'^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            _ => return Err(err(col, format!("unexpected character '{}'", c as char))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    nvars: usize,
    end_col: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn expr(&mut self) -> Result<Poly> {
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

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let col = self.col();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(err(col, "division only by nonzero constants"));
                    }
                    let c = d.terms()[0].1.clone();
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let col = self.col();
            match self.peek() {
                Some(Tok::Num(n)) => {
                    let e = u32::try_from(n.clone()).map_err(|_| err(col, "exponent too large"))?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => Err(err(col, "expected nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(self.nvars, Scalar::from_integer(n)))
            }
            Some(Tok::Var(i)) => {
                self.pos += 1;
                Ok(Poly::var(self.nvars, i))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.col(), "expected ')'")),
                }
            }
            Some(t) => Err(err(col, format!("unexpected token {:?}", t))),
            None => Err(err(col, "unexpected end of input")),
        }
    }
}

/// Parses `text` as a polynomial in `ring`.
pub fn parse_poly(ring: &PolyRing, text: &str) -> Result<Poly> {
    let toks = lex(ring, text)?;
    let mut p = Parser { toks: &toks, pos: 0, nvars: ring.nvars(), end_col: text.len() + 1 };
    if toks.is_empty() {
        return Err(err(1, "empty polynomial"));
    }
    let f = p.expr()?;
    if p.pos != toks.len() {
        return Err(err(p.col(), "trailing input"));
    }
    Ok(f)
}

fn parse_scalar(s: &str, col: usize) -> Result<Scalar> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, s),
    };
    let v = match body.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| err(col, format!("bad number '{}'", s)))?;
            let b: BigInt = b.trim().parse().map_err(|_| err(col, format!("bad number '{}'", s)))?;
            if b.is_zero() {
                return Err(err(col, "zero denominator"));
            }
            Scalar::new(a, b)
        }
        None => Scalar::from_integer(body.parse().map_err(|_| err(col, format!("bad number '{}'", s)))?),
    };
    Ok(if neg { -v } else { v })
}

/// Parses a bracketed coordinate list such as `[1,0,-1/2]`.
pub fn parse_point(text: &str) -> Result<ProjPoint> {
    let t = text.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| err(1, "point must be written as [a0,a1,...]"))?;
    let mut coords = Vec::new();
    let mut col = 2;
    for piece in inner.split(',') {
        coords.push(parse_scalar(piece, col)?);
        col += piece.len() + 1;
    }
    ProjPoint::new(coords)
}
