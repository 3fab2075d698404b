//! Text, LaTeX and JSON renderings.
//!
//! Text output lists terms by descending `x` degree, then descending `a`
//! degree, then ascending `q` exponent. JSON term arrays are sorted by
//! `(x, a, q)` ascending.

use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{MPoly, QLaurent, QRational, TruncSeries};

/// One term `num/den * q^q * x^x * a^a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: i32,
    pub x: u32,
    pub a: u32,
    pub num: String,
    pub den: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRationalJson {
    pub num: Vec<TermJson>,
    pub den: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub order: usize,
    pub coeffs: Vec<QRationalJson>,
}

fn power(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn push_term(out: &mut String, c: &BigRational, factors: &[String]) {
    let neg = c.is_negative();
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let abs = c.abs();
    if factors.is_empty() {
        out.push_str(&abs.to_string());
    } else {
        if !abs.is_one() {
            out.push_str(&abs.to_string());
            out.push(' ');
        }
        out.push_str(&factors.join(" "));
    }
}

fn text_terms<'a, I>(terms: I) -> String
where
    I: Iterator<Item = ((u32, u32), &'a QLaurent)>,
{
    let mut out = String::new();
    for ((ex, ea), c) in terms {
        for (eq, coef) in c.terms() {
            let factors: Vec<String> = [power("q", eq as i64), power("x", ex as i64), power("a", ea as i64)]
                .into_iter()
                .flatten()
                .collect();
            push_term(&mut out, &coef, &factors);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn laurent_text(p: &QLaurent) -> String {
    text_terms(std::iter::once(((0, 0), p)))
}

pub fn mpoly_text(p: &MPoly) -> String {
    text_terms(p.terms().rev().map(|(m, c)| (*m, c)))
}

pub fn qrational_text(r: &QRational) -> String {
    if r.is_laurent() {
        laurent_text(r.num())
    } else {
        format!("({})/({})", laurent_text(r.num()), laurent_text(r.den()))
    }
}

pub fn series_text(s: &TruncSeries, var: &str) -> String {
    let mut parts = Vec::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let body = if c.is_laurent() && c.num().num_terms() == 1 {
            qrational_text(c)
        } else {
            format!("({})", qrational_text(c))
        };
        parts.push(match power(var, n as i64) {
            Some(v) => format!("{body} {v}"),
            None => body,
        });
    }
    let mut out = if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    };
    out.push_str(&format!(" + O({var}^{})", s.order()));
    out
}

fn latex_power(var: &str, e: i64) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{{{e}}}")),
    }
}

fn latex_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn laurent_latex(p: &QLaurent) -> String {
    let mut out = String::new();
    for (e, c) in p.terms() {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        match latex_power("q", e as i64) {
            Some(qp) if abs.is_one() => out.push_str(&qp),
            Some(qp) => out.push_str(&format!("{} {qp}", latex_rational(&abs))),
            None => out.push_str(&latex_rational(&abs)),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Groups by monomial in `x` and `a`, writing each coefficient as a
/// q-polynomial.
pub fn mpoly_latex(p: &MPoly) -> String {
    let mut out = String::new();
    for (&(ex, ea), c) in p.terms().rev() {
        let mono: Vec<String> = [latex_power("x", ex as i64), latex_power("a", ea as i64)]
            .into_iter()
            .flatten()
            .collect();
        let mono = mono.join(" ");
        let (neg, coef) = if c.num_terms() == 1 && c.leading_coeff().is_negative() {
            (true, -c)
        } else {
            (false, c.clone())
        };
        let body = if mono.is_empty() {
            laurent_latex(&coef)
        } else if coef.is_one() {
            mono
        } else if coef.num_terms() == 1 {
            format!("{} {mono}", laurent_latex(&coef))
        } else {
            format!("\\left({}\\right) {mono}", laurent_latex(&coef))
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn qrational_latex(r: &QRational) -> String {
    if r.is_laurent() {
        laurent_latex(r.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", laurent_latex(r.num()), laurent_latex(r.den()))
    }
}

fn term_json(eq: i32, ex: u32, ea: u32, c: &BigRational) -> TermJson {
    TermJson {
        q: eq,
        x: ex,
        a: ea,
        num: c.numer().to_string(),
        den: c.denom().to_string(),
    }
}

pub fn laurent_json(p: &QLaurent) -> Vec<TermJson> {
    p.terms().map(|(e, c)| term_json(e, 0, 0, &c)).collect()
}

pub fn mpoly_json(p: &MPoly) -> Vec<TermJson> {
    p.terms()
        .flat_map(|(&(ex, ea), c)| c.terms().map(move |(e, v)| term_json(e, ex, ea, &v)))
        .collect()
}

pub fn qrational_json(r: &QRational) -> QRationalJson {
    QRationalJson {
        num: laurent_json(r.num()),
        den: laurent_json(r.den()),
    }
}

pub fn series_json(s: &TruncSeries) -> SeriesJson {
    SeriesJson {
        order: s.order(),
        coeffs: s.coeffs().iter().map(qrational_json).collect(),
    }
}

/// `serde_json::Value` form of a polynomial's term array.
pub fn mpoly_json_value(p: &MPoly) -> serde_json::Value {
    serde_json::to_value(mpoly_json(p)).expect("term list serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_examples() {
        let r2 = QLaurent::from_coeffs(0, &[1, 1]);
        assert_eq!(mpoly_text(&(MPoly::x() + MPoly::constant(r2))), "x + 1 + q");
        assert_eq!(mpoly_text(&(MPoly::x() - MPoly::a())), "x - a");
        assert_eq!(mpoly_text(&MPoly::x().shift_q(1)), "q x");
        assert_eq!(laurent_text(&QLaurent::from_coeffs(-2, &[-1, -1])), "-q^-2 - q^-1");
        assert_eq!(mpoly_text(&MPoly::zero()), "0");
        let half = QLaurent::constant(BigRational::new((-3).into(), 2.into())).shift(3);
        assert_eq!(laurent_text(&half), "-3/2 q^3");
    }

    #[test]
    fn latex_examples() {
        let r2 = QLaurent::from_coeffs(0, &[1, 1]);
        let p = MPoly::x_pow(2) + MPoly::x().scale(&r2) - MPoly::a().shift_q(2);
        assert_eq!(mpoly_latex(&p), "x^{2} + \\left(1 + q\\right) x - q^{2} a");
    }

    #[test]
    fn json_sorted_ascending() {
        let p = MPoly::x() + MPoly::a().shift_q(-1) + MPoly::one();
        let js = mpoly_json(&p);
        let keys: Vec<(u32, u32, i32)> = js.iter().map(|t| (t.x, t.a, t.q)).collect();
        assert_eq!(keys, vec![(0, 0, 0), (0, 1, -1), (1, 0, 0)]);
    }
}
