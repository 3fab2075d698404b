//! Polynomials in the commuting indeterminates `x` and `a` over the Laurent
//! ring `Q[q, 1/q]`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;

use super::QLaurent;
use crate::error::{Error, Result};

/// Exponent pair `(e_x, e_a)`.
pub type Monomial = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, QLaurent>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(QLaurent::one())
    }

    pub fn x() -> Self {
        Self::monomial(QLaurent::one(), 1, 0)
    }

    pub fn a() -> Self {
        Self::monomial(QLaurent::one(), 0, 1)
    }

    pub fn constant(c: QLaurent) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(QLaurent::from_int(c))
    }

    /// `c * x^ex * a^ea`.
    pub fn monomial(c: QLaurent, ex: u32, ea: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((ex, ea), c);
        }
        MPoly { terms }
    }

    /// `x^k`.
    pub fn x_pow(k: u32) -> Self {
        Self::monomial(QLaurent::one(), k, 0)
    }

    /// `a^k`.
    pub fn a_pow(k: u32) -> Self {
        Self::monomial(QLaurent::one(), 0, k)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, QLaurent)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(QLaurent::is_one)
    }

    /// Terms in ascending `(e_x, e_a)` order; coefficients are never zero.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &QLaurent)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, ex: u32, ea: u32) -> QLaurent {
        self.terms.get(&(ex, ea)).cloned().unwrap_or_default()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.0).max()
    }

    pub fn degree_a(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.1).max()
    }

    /// Leading term in lexicographic order with `x > a`.
    pub fn leading_term(&self) -> Option<(&Monomial, &QLaurent)> {
        self.terms.iter().next_back()
    }

    /// Coefficient of `x^k` as a polynomial in `a` only.
    pub fn x_coeff(&self, k: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .range((k, 0)..=(k, u32::MAX))
                .map(|(&(_, ea), c)| ((0, ea), c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `x^0 ..= x^deg`, each a polynomial in `a`.
    pub fn x_coeffs(&self) -> Vec<MPoly> {
        let Some(deg) = self.degree_x() else {
            return Vec::new();
        };
        let mut out = vec![MPoly::zero(); deg as usize + 1];
        for (&(ex, ea), c) in &self.terms {
            out[ex as usize].terms.insert((0, ea), c.clone());
        }
        out
    }

    /// True when every term is free of `x`.
    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|m| m.0 == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == (0, 0))
    }

    /// The constant coefficient as a Laurent polynomial, if the polynomial
    /// has no `x` or `a` dependence.
    pub fn as_constant(&self) -> Option<QLaurent> {
        self.is_constant().then(|| self.coeff(0, 0))
    }

    fn add_term(&mut self, m: Monomial, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn sub_term(&mut self, m: Monomial, c: &QLaurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(-c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() -= c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &QLaurent) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &BigRational) -> MPoly {
        self.scale(&QLaurent::constant(c.clone()))
    }

    /// Multiplies by `q^k`.
    pub fn shift_q(&self, k: i32) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v.shift(k))).collect(),
        }
    }

    /// Multiplies by `c * x^ex * a^ea`.
    pub fn mul_monomial(&self, c: &QLaurent, ex: u32, ea: u32) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self.terms.iter().map(|(m, v)| ((m.0 + ex, m.1 + ea), v * c)).collect(),
        }
    }

    /// Multiplies by `x^k`.
    pub fn mul_x_pow(&self, k: u32) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, v)| ((m.0 + k, m.1), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `f(x) -> f(c x)`: each `x^e` picks up `c^e`; `a` is untouched.
    pub fn substitute_x_scale(&self, c: &QLaurent) -> MPoly {
        let mut powers: Vec<QLaurent> = vec![QLaurent::one()];
        let mut out = MPoly::zero();
        for (&(ex, ea), v) in &self.terms {
            while powers.len() <= ex as usize {
                let next = powers.last().unwrap() * c;
                powers.push(next);
            }
            out.add_term((ex, ea), &(v * &powers[ex as usize]));
        }
        out
    }

    /// Replaces `a` by `x`.
    pub fn substitute_a_to_x(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (&(ex, ea), v) in &self.terms {
            out.add_term((ex + ea, 0), v);
        }
        out
    }

    /// Replaces `x` by `a`.
    pub fn substitute_x_to_a(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (&(ex, ea), v) in &self.terms {
            out.add_term((0, ex + ea), v);
        }
        out
    }

    /// Value at `x = 0`.
    pub fn eval_x_zero(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0 == 0)
                .map(|(m, v)| (*m, v.clone()))
                .collect(),
        }
    }

    /// Specializes `q = 1`; the resulting coefficients are rational constants.
    pub fn at_q_one(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, v) in &self.terms {
            out.add_term(*m, &QLaurent::constant(v.eval_at_one()));
        }
        out
    }

    /// Evaluates at `q = 1` and the given rational `x`, `a`.
    pub fn eval_q1(&self, x: &BigRational, a: &BigRational) -> BigRational {
        self.terms
            .iter()
            .map(|(&(ex, ea), v)| {
                v.eval_at_one() * num_traits::pow(x.clone(), ex as usize) * num_traits::pow(a.clone(), ea as usize)
            })
            .fold(BigRational::from_integer(0.into()), |s, t| s + t)
    }

    /// The unique `Q` with `self = Q * den`.
    ///
    /// Runs the division algorithm in lex order `x > a`; each step divides
    /// leading coefficients exactly in the Laurent ring.
    pub fn exact_div(&self, den: &MPoly) -> Result<MPoly> {
        let Some((&(dx, da), dc)) = den.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        if let Some(c) = den.as_constant() {
            let mut out = MPoly::zero();
            for (m, v) in &self.terms {
                out.terms.insert(*m, v.exact_div(&c)?);
            }
            return Ok(out);
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((&(rx, ra), rc)) = rem.leading_term() {
            if rx < dx || ra < da {
                return Err(Error::NonExactDivision);
            }
            let c = rc.exact_div(dc)?;
            let (ex, ea) = (rx - dx, ra - da);
            for (&(mx, ma), v) in &den.terms {
                rem.sub_term((mx + ex, ma + ea), &(v * &c));
            }
            quot.terms.insert((ex, ea), c);
        }
        Ok(quot)
    }

    fn mul_impl(&self, rhs: &MPoly) -> MPoly {
        let mut acc: BTreeMap<Monomial, QLaurent> = BTreeMap::new();
        for (&(ax, aa), ac) in &self.terms {
            for (&(bx, ba), bc) in &rhs.terms {
                acc.entry((ax + bx, aa + ba)).or_default().add_mul_assign(ac, bc);
            }
        }
        acc.retain(|_, v| !v.is_zero());
        MPoly { terms: acc }
    }
}

impl From<QLaurent> for MPoly {
    fn from(c: QLaurent) -> Self {
        MPoly::constant(c)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, -v)).collect(),
        }
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.into_iter().map(|(m, v)| (m, -v)).collect(),
        }
    }
}

impl AddAssign<&MPoly> for MPoly {
    fn add_assign(&mut self, rhs: &MPoly) {
        for (m, v) in &rhs.terms {
            self.add_term(*m, v);
        }
    }
}

impl SubAssign<&MPoly> for MPoly {
    fn sub_assign(&mut self, rhs: &MPoly) {
        for (m, v) in &rhs.terms {
            self.sub_term(*m, v);
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                $body(self, rhs)
            }
        }
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                $body(&self, &rhs)
            }
        }
        impl $tr<&MPoly> for MPoly {
            type Output = MPoly;
            fn $m(self, rhs: &MPoly) -> MPoly {
                $body(&self, rhs)
            }
        }
        impl $tr<MPoly> for &MPoly {
            type Output = MPoly;
            fn $m(self, rhs: MPoly) -> MPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &MPoly, b: &MPoly| {
    let mut out = a.clone();
    out += b;
    out
});
forward_binop!(Sub, sub, |a: &MPoly, b: &MPoly| {
    let mut out = a.clone();
    out -= b;
    out
});
forward_binop!(Mul, mul, |a: &MPoly, b: &MPoly| a.mul_impl(b));

impl std::iter::Sum for MPoly {
    fn sum<I: Iterator<Item = MPoly>>(iter: I) -> Self {
        iter.fold(MPoly::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl std::iter::Product for MPoly {
    fn product<I: Iterator<Item = MPoly>>(iter: I) -> Self {
        iter.fold(MPoly::one(), |a, b| a * b)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::mpoly_text(self))
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qi(c: &[i64]) -> QLaurent {
        QLaurent::from_coeffs(0, c)
    }

    #[test]
    fn arithmetic_examples() {
        let x = MPoly::x();
        let a = MPoly::a();
        let r2 = MPoly::constant(qi(&[1, 1]));
        assert_eq!(&(&x - &r2) * &MPoly::one(), &x - &r2);

        let p2 = (&x - &a) * (&x - &a.shift_q(1));
        let expect = MPoly::x_pow(2) - (&x * &a).scale(&qi(&[1, 1])) + MPoly::a_pow(2).shift_q(1);
        assert_eq!(p2, expect);

        assert!(((&x + &a) - (&x + &a)).is_zero());
    }

    #[test]
    fn x_scaling() {
        let q = QLaurent::q_pow(1);
        assert_eq!(MPoly::x_pow(2).substitute_x_scale(&q), MPoly::x_pow(2).shift_q(2));
        assert_eq!(
            (MPoly::x() + MPoly::a()).substitute_x_scale(&q),
            MPoly::x().shift_q(1) + MPoly::a()
        );
        assert_eq!(MPoly::one().substitute_x_scale(&QLaurent::q_pow(5)), MPoly::one());
    }

    #[test]
    fn exact_division() {
        let x = MPoly::x();
        let a = MPoly::a();
        let f = (&x - &a.shift_q(2)) * (&x.scale(&qi(&[1, -1])) + MPoly::constant(qi(&[0, 0, 3])));
        let g = &x - &a.shift_q(2);
        let quot = f.exact_div(&g).unwrap();
        assert_eq!(&quot * &g, f);
        assert_eq!((&x + MPoly::one()).exact_div(&x), Err(Error::NonExactDivision));
        assert_eq!(x.exact_div(&(&x + &a)), Err(Error::NonExactDivision));
        assert_eq!(x.exact_div(&MPoly::zero()), Err(Error::DivisionByZero));
    }
}
