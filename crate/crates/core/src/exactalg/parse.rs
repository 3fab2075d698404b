//! Parsers for the text and JSON renderings.
//!
//! The text grammar accepts sums of products: factors are rationals
//! (`3`, `3/2`), the variables `q`, `x`, `a` with optional `^exponent`, and
//! parenthesized subexpressions. Juxtaposition and `*` both multiply.

use std::iter::Peekable;
use std::str::Chars;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::render::{QRationalJson, SeriesJson, TermJson};
use super::{MPoly, QLaurent, QRational, TruncSeries};
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Peekable<Chars<'a>>,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            chars: s.chars().peekable(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|c| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_digit() {
                s.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        s
    }

    fn exponent(&mut self) -> Result<i64> {
        self.skip_ws();
        if self.chars.peek() != Some(&'^') {
            return Ok(1);
        }
        self.chars.next();
        self.skip_ws();
        let neg = if self.chars.peek() == Some(&'-') {
            self.chars.next();
            true
        } else {
            false
        };
        let d = self.digits();
        let v: i64 = d.parse().map_err(|_| err("bad exponent"))?;
        Ok(if neg { -v } else { v })
    }

    fn expr(&mut self) -> Result<MPoly> {
        let mut acc = MPoly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.chars.next();
                -1
            }
            Some('+') => {
                self.chars.next();
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            if sign < 0 {
                acc -= &t;
            } else {
                acc += &t;
            }
            match self.peek() {
                Some('+') => {
                    self.chars.next();
                    sign = 1;
                }
                Some('-') => {
                    self.chars.next();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.chars.next();
                    acc = &acc * &self.factor()?;
                }
                Some(c) if c.is_ascii_digit() || matches!(c, 'q' | 'x' | 'a' | '(') => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().map_err(|_| err("bad integer"))?;
                let mut d = BigInt::from(1);
                if self.chars.peek() == Some(&'/') {
                    self.chars.next();
                    let ds = self.digits();
                    if ds.is_empty() {
                        return Err(err("expected denominator"));
                    }
                    d = ds.parse().map_err(|_| err("bad denominator"))?;
                    if d.is_zero() {
                        return Err(err("zero denominator"));
                    }
                }
                Ok(MPoly::constant(QLaurent::constant(BigRational::new(n, d))))
            }
            Some('q') => {
                self.chars.next();
                let e = self.exponent()?;
                let e = i32::try_from(e).map_err(|_| err("exponent out of range"))?;
                Ok(MPoly::constant(QLaurent::q_pow(e)))
            }
            Some(v @ ('x' | 'a')) => {
                self.chars.next();
                let e = self.exponent()?;
                let e = u32::try_from(e).map_err(|_| err(format!("negative power of {v}")))?;
                Ok(if v == 'x' { MPoly::x_pow(e) } else { MPoly::a_pow(e) })
            }
            Some('(') => {
                self.chars.next();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(err("expected ')'"));
                }
                self.chars.next();
                let e = self.exponent()?;
                let e = u32::try_from(e).map_err(|_| err("negative power of a group"))?;
                Ok(inner.pow(e))
            }
            Some(c) => Err(err(format!("unexpected '{c}'"))),
            None => Err(err("unexpected end of input")),
        }
    }

    fn finish(mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(err(format!("trailing input at '{c}'"))),
        }
    }
}

pub fn parse_mpoly(s: &str) -> Result<MPoly> {
    let mut p = Parser::new(s);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

pub fn parse_laurent(s: &str) -> Result<QLaurent> {
    parse_mpoly(s)?
        .as_constant()
        .ok_or_else(|| err("expected a polynomial in q only"))
}

/// Accepts either a Laurent polynomial or `(num)/(den)`.
pub fn parse_qrational(s: &str) -> Result<QRational> {
    let t = s.trim();
    if let Some(idx) = t.find(")/(") {
        if t.starts_with('(') && t.ends_with(')') {
            let num = parse_laurent(&t[1..idx])?;
            let den = parse_laurent(&t[idx + 3..t.len() - 1])?;
            return QRational::new(num, den);
        }
    }
    Ok(QRational::from(parse_laurent(t)?))
}

fn rational_from_json(t: &TermJson) -> Result<BigRational> {
    let n: BigInt = t.num.parse().map_err(|_| err(format!("bad numerator {:?}", t.num)))?;
    let d: BigInt = t.den.parse().map_err(|_| err(format!("bad denominator {:?}", t.den)))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

pub fn mpoly_from_json(terms: &[TermJson]) -> Result<MPoly> {
    let mut p = MPoly::zero();
    for t in terms {
        let c = QLaurent::monomial(rational_from_json(t)?, t.q);
        p += &MPoly::monomial(c, t.x, t.a);
    }
    Ok(p)
}

pub fn laurent_from_json(terms: &[TermJson]) -> Result<QLaurent> {
    mpoly_from_json(terms)?
        .as_constant()
        .ok_or_else(|| err("expected a polynomial in q only"))
}

pub fn qrational_from_json(v: &QRationalJson) -> Result<QRational> {
    QRational::new(laurent_from_json(&v.num)?, laurent_from_json(&v.den)?)
}

pub fn series_from_json(v: &SeriesJson) -> Result<TruncSeries> {
    if v.coeffs.len() != v.order {
        return Err(err("coefficient count differs from order"));
    }
    let coeffs = v.coeffs.iter().map(qrational_from_json).collect::<Result<Vec<_>>>()?;
    Ok(TruncSeries::from_coeffs(coeffs))
}

/// Parses a JSON term array such as the one produced by `mpoly_json`.
pub fn mpoly_from_json_str(s: &str) -> Result<MPoly> {
    let terms: Vec<TermJson> = serde_json::from_str(s).map_err(|e| err(e.to_string()))?;
    mpoly_from_json(&terms)
}
