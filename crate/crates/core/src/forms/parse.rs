//! Expression parser for forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*'? unary)*          juxtaposition multiplies
//! unary  := ('+' | '-') unary | power
//! power  := atom ('^' INT)?
//! atom   := INT ('/' INT)? | 'i' | VAR | '(' expr ')'
//! VAR    := x0 … x9 | x | y | z
//! ```
//!
//! Powers are expanded symbolically. The result must be homogeneous.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::NForm;
use crate::error::{Error, Result};
use crate::exactnum::{GaussRat, Rat};

const MAX_VARS: usize = 10;
const MAX_EXPONENT: u32 = 256;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rat),
    I,
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    let digits = |mut p: usize| {
        while p < b.len() && b[p].is_ascii_digit() {
            p += 1;
        }
        p
    };
    while pos < b.len() {
        let c = b[pos];
        let start = pos;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'0'..=b'9' => {
                let end = digits(pos);
                let num: BigInt = s[pos..end].parse().unwrap();
                pos = end;
                let mut look = pos;
                while look < b.len() && b[look] == b' ' {
                    look += 1;
                }
                if look < b.len() && b[look] == b'/' {
                    let mut dpos = look + 1;
                    while dpos < b.len() && b[dpos] == b' ' {
                        dpos += 1;
                    }
                    let dend = digits(dpos);
                    if dend == dpos {
                        return Err(err(dpos, "expected denominator after '/'"));
                    }
                    let den: BigInt = s[dpos..dend].parse().unwrap();
                    if den.is_zero() {
                        return Err(err(dpos, "zero denominator"));
                    }
                    out.push((start, Tok::Num(Rat::new(num, den))));
                    pos = dend;
                } else {
                    out.push((start, Tok::Num(Rat::from_integer(num))));
                }
                continue;
            }
            b'x' => {
                pos += 1;
                if pos < b.len() && b[pos].is_ascii_digit() {
                    let end = digits(pos);
                    let idx: usize = s[pos..end]
                        .parse()
                        .map_err(|_| err(pos, "bad variable index"))?;
                    if idx >= MAX_VARS {
                        return Err(err(start, "variable index out of range (x0..x9)"));
                    }
                    out.push((start, Tok::Var(idx)));
                    pos = end;
                } else {
                    out.push((start, Tok::Var(0)));
                }
                continue;
            }
            b'y' => out.push((start, Tok::Var(1))),
            b'z' => out.push((start, Tok::Var(2))),
            b'i' => out.push((start, Tok::I)),
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            b'/' => return Err(err(pos, "division is only allowed inside rational literals")),
            _ => return Err(err(pos, &format!("unexpected character '{}'", c as char))),
        }
        pos += 1;
    }
    Ok(out)
}

type Poly = BTreeMap<[u32; MAX_VARS], GaussRat>;

fn poly_const(c: GaussRat) -> Poly {
    let mut p = Poly::new();
    if !c.is_zero() {
        p.insert([0; MAX_VARS], c);
    }
    p
}

fn poly_add(a: &Poly, b: &Poly, sign: &GaussRat) -> Poly {
    let mut out = a.clone();
    for (m, c) in b {
        let v = out.entry(*m).or_insert_with(GaussRat::zero);
        *v += c * sign;
        if v.is_zero() {
            out.remove(m);
        }
    }
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let mut m = [0u32; MAX_VARS];
            for k in 0..MAX_VARS {
                m[k] = m1[k] + m2[k];
            }
            let v = out.entry(m).or_insert_with(GaussRat::zero);
            *v += c1 * c2;
            if v.is_zero() {
                out.remove(&m);
            }
        }
    }
    out
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos(), msg: msg.to_string() }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => GaussRat::one(),
                Some(Tok::Minus) => -GaussRat::one(),
                _ => return Ok(acc),
            };
            self.at += 1;
            let rhs = self.term()?;
            acc = poly_add(&acc, &rhs, &sign);
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                }
                Some(Tok::Num(_) | Tok::I | Tok::Var(_) | Tok::LParen) => {}
                _ => return Ok(acc),
            }
            let rhs = self.unary()?;
            acc = poly_mul(&acc, &rhs);
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                let p = self.unary()?;
                Ok(poly_add(&Poly::new(), &p, &-GaussRat::one()))
            }
            Some(Tok::Plus) => {
                self.at += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let e = match self.peek() {
            Some(Tok::Num(r)) if r.is_integer() => r.to_integer(),
            _ => return Err(self.err("exponent must be a nonnegative integer")),
        };
        let e: u32 = match u32::try_from(&e) {
            Ok(v) if v <= MAX_EXPONENT => v,
            _ => return Err(self.err("exponent too large")),
        };
        self.at += 1;
        let mut acc = poly_const(GaussRat::one());
        for _ in 0..e {
            acc = poly_mul(&acc, &base);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Num(r)) => {
                self.at += 1;
                Ok(poly_const(GaussRat::from_rat(r)))
            }
            Some(Tok::I) => {
                self.at += 1;
                Ok(poly_const(GaussRat::i()))
            }
            Some(Tok::Var(k)) => {
                self.at += 1;
                let mut m = [0u32; MAX_VARS];
                m[k] = 1;
                Ok(Poly::from([(m, GaussRat::one())]))
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let p = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected ')'"));
                }
                self.at += 1;
                Ok(p)
            }
            Some(_) => Err(self.err("expected a number, variable, 'i' or '('")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a homogeneous form. The variable count is one more than the
/// largest index used, and at least 2.
pub fn parse_form(s: &str) -> Result<NForm> {
    parse_form_in(s, 2)
}

/// As [`parse_form`], with at least `min_vars` variables.
pub fn parse_form_in(s: &str, min_vars: usize) -> Result<NForm> {
    let toks = lex(s)?;
    let mut p = Parser { toks, at: 0, end: s.len() };
    if p.toks.is_empty() {
        return Err(Error::Parse { pos: 0, msg: "empty expression".into() });
    }
    let poly = p.expr()?;
    if p.at != p.toks.len() {
        return Err(p.err("unexpected token"));
    }
    if poly.is_empty() {
        return Err(Error::ZeroForm);
    }
    let degrees: Vec<u32> = poly.keys().map(|m| m.iter().sum()).collect();
    let d = degrees[0];
    if degrees.iter().any(|&e| e != d) {
        return Err(Error::DegreeMismatch("expression is not homogeneous".into()));
    }
    let used = poly
        .keys()
        .flat_map(|m| (0..MAX_VARS).filter(move |&k| m[k] > 0))
        .max()
        .map_or(0, |k| k + 1);
    let nvars = used.max(min_vars);
    if nvars > MAX_VARS {
        return Err(Error::OutOfRange(format!("{nvars} variables")));
    }
    NForm::from_terms(
        nvars,
        d,
        poly.into_iter().map(|(m, c)| {
            let mut a = m.to_vec();
            a.resize(nvars, 0);
            (a, c)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expands_powers() {
        let f = parse_form("(x+y)^3").unwrap();
        assert_eq!(f.nvars(), 2);
        assert_eq!(f.coeff(&[2, 1]), GaussRat::from_int(3));
        let g = parse_form("x0^3 + 3x0^2 x1 + 3*x0*x1^2 + x1^3").unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn gaussian_and_rational_literals() {
        let f = parse_form("(2+i)*x0*x1 - 3/2 x2^2").unwrap();
        assert_eq!(f.nvars(), 3);
        assert_eq!(f.coeff(&[1, 1, 0]), GaussRat::from_ints(2, 1));
        assert_eq!(f.coeff(&[0, 0, 2]), GaussRat::from_frac(-3, 2));
        let g = parse_form("(x + i*y)^2").unwrap();
        assert_eq!(g.coeff(&[0, 2]), GaussRat::from_int(-1));
    }

    #[test]
    fn round_trip_through_display() {
        for src in ["3/2*x0^3 - x0*x1^2 + (2+i)*x1^3", "-i*x0^2 + 5*i*x1^2", "x0*x1 - 2/7*x1^2"] {
            let f = parse_form(src).unwrap();
            assert_eq!(parse_form(&f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_form("x^2 + y"), Err(Error::DegreeMismatch(_))));
        assert!(matches!(parse_form("x - x"), Err(Error::ZeroForm)));
        assert!(matches!(parse_form("x / y"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_form("(x + y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("x^y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_form("w"), Err(Error::Parse { pos: 0, .. })));
    }
}
