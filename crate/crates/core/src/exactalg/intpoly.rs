//! Dense univariate integer polynomial helpers used by the Laurent and
//! rational-function types. Index `i` holds the coefficient of `q^i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the content and makes the leading coefficient positive.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let mut g = content(p);
    if g.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(Signed::is_negative) {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Exact quotient `a / b` in `Z[q]`, or `None` when `b` does not divide `a`.
/// `b` must be nonzero and trimmed.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert!(b.last().is_some_and(|c| !c.is_zero()));
    if a.iter().all(Zero::is_zero) {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let shift_max = a.len() - b.len();
    let mut quot = vec![BigInt::zero(); shift_max + 1];
    for shift in (0..=shift_max).rev() {
        let top = &rem[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            if !bc.is_zero() {
                rem[shift + i] -= &qc * bc;
            }
        }
        quot[shift] = qc;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let lb = b.last().unwrap();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &lr * bc;
        }
        trim(&mut r);
        let g = content(&r);
        if !g.is_zero() && !g.is_one() {
            for c in r.iter_mut() {
                *c /= &g;
            }
        }
    }
    r
}

/// Primitive greatest common divisor with positive leading coefficient.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive(a);
    let mut y = primitive(b);
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive(&r);
    }
    primitive(&x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1+q)(1+q+q^2) and (1+q)(1-q)
        let a = p(&[1, 2, 2, 1]);
        let b = p(&[1, 0, -1]);
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
        assert_eq!(gcd(&a, &p(&[3])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&p(&[1, 0, 0, -1]), &p(&[1, -1])), Some(p(&[1, 1, 1])));
        assert_eq!(div_exact(&p(&[1, 0, -1]), &p(&[1, 0, 0, -1])), None);
        assert_eq!(div_exact(&p(&[1, 1]), &p(&[2])), None);
    }
}
