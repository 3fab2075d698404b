//! Laurent polynomials in `q` with rational coefficients.
//!
//! Storage is dense between the lowest and highest nonzero exponents, with
//! integer numerators over one shared positive denominator. Every value is
//! kept canonical (trimmed, content coprime to the denominator), so
//! structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::intpoly;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QLaurent {
    lo: i32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent {
            lo: 0,
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_parts(0, vec![BigInt::from(c)], BigInt::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: BigRational, e: i32) -> Self {
        let (n, d) = c.into_raw();
        Self::from_parts(e, vec![n], d)
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        QLaurent {
            lo: e,
            num: vec![BigInt::one()],
            den: BigInt::one(),
        }
    }

    /// Builds a value from integer coefficients of `q^lo, q^(lo+1), ...`.
    pub fn from_coeffs(lo: i32, coeffs: &[i64]) -> Self {
        Self::from_parts(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect(), BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(terms: I) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (e, c)| acc + Self::monomial(c, e))
    }

    pub(crate) fn from_parts(lo: i32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut v = QLaurent { lo, num, den };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        let lead_zeros = self.num.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.num.len() {
            *self = Self::zero();
            return;
        }
        if lead_zeros > 0 {
            self.num.drain(..lead_zeros);
            self.lo += lead_zeros as i32;
        }
        intpoly::trim(&mut self.num);
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        if !self.den.is_one() {
            let g = intpoly::content(&self.num).gcd(&self.den);
            if !g.is_one() {
                for c in self.num.iter_mut() {
                    *c /= &g;
                }
                self.den /= &g;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lo == 0 && self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.lo)
    }

    /// Highest exponent carrying a nonzero coefficient.
    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.lo + self.num.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> BigRational {
        let idx = e - self.lo;
        if idx < 0 || idx as usize >= self.num.len() {
            return BigRational::zero();
        }
        BigRational::new(self.num[idx as usize].clone(), self.den.clone())
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, BigRational)> + '_ {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i32, BigRational::new(c.clone(), self.den.clone())))
    }

    pub fn num_terms(&self) -> usize {
        self.num.iter().filter(|c| !c.is_zero()).count()
    }

    /// Coefficient of the highest power of `q`.
    pub fn leading_coeff(&self) -> BigRational {
        match self.max_exp() {
            Some(e) => self.coeff(e),
            None => BigRational::zero(),
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent {
            lo: self.lo + k,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = self.num.iter().map(|x| x * c.numer()).collect();
        Self::from_parts(self.lo, num, &self.den * c.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigRational {
        let s: BigInt = self.num.iter().sum();
        BigRational::new(s, self.den.clone())
    }

    /// The unique `Q` with `self = Q * den`, failing with `NonExactDivision`
    /// when no such Laurent polynomial exists.
    pub fn exact_div(&self, den: &QLaurent) -> Result<QLaurent> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Gauss: dividing by a primitive integer polynomial keeps integrality.
        let c = intpoly::content(&den.num);
        let mut prim = den.num.clone();
        let c = if den.num.last().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            for x in prim.iter_mut() {
                *x /= &c;
            }
        }
        let q = intpoly::div_exact(&self.num, &prim).ok_or(Error::NonExactDivision)?;
        // self/den = (num_a/den_a) / (c*prim/den_b) = Q * den_b / (den_a * c)
        let num = q.into_iter().map(|x| x * &den.den).collect();
        Ok(Self::from_parts(self.lo - den.lo, num, &self.den * c))
    }

    /// Accumulates `a * b` into `self`.
    pub fn add_mul_assign(&mut self, a: &QLaurent, b: &QLaurent) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if !(self.den.is_one() && a.den.is_one() && b.den.is_one()) {
            *self = &*self + &(a * b);
            return;
        }
        let plo = a.lo + b.lo;
        let phi = plo + (a.num.len() + b.num.len() - 2) as i32;
        if self.is_zero() {
            self.lo = plo;
        }
        let lo = self.lo.min(plo);
        let hi = if self.is_zero() {
            phi
        } else {
            (self.lo + self.num.len() as i32 - 1).max(phi)
        };
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            self.num.splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.lo = lo;
        }
        let want = (hi - self.lo + 1) as usize;
        if self.num.len() < want {
            self.num.resize(want, BigInt::zero());
        }
        let base = (plo - self.lo) as usize;
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    self.num[base + i + j] += x * y;
                }
            }
        }
        self.normalize();
    }

    fn add_impl(&self, rhs: &QLaurent, negate: bool) -> QLaurent {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -rhs } else { rhs.clone() };
        }
        let (fa, fb, den) = if self.den == rhs.den {
            (None, None, self.den.clone())
        } else {
            let g = self.den.gcd(&rhs.den);
            let fa = &rhs.den / &g;
            let fb = &self.den / &g;
            let den = &self.den * &fa;
            (Some(fa), Some(fb), den)
        };
        let lo = self.lo.min(rhs.lo);
        let hi_a = self.lo + self.num.len() as i32;
        let hi_b = rhs.lo + rhs.num.len() as i32;
        let hi = hi_a.max(hi_b);
        let mut num = vec![BigInt::zero(); (hi - lo) as usize];
        let oa = (self.lo - lo) as usize;
        for (i, c) in self.num.iter().enumerate() {
            num[oa + i] = match &fa {
                Some(f) => c * f,
                None => c.clone(),
            };
        }
        let ob = (rhs.lo - lo) as usize;
        for (i, c) in rhs.num.iter().enumerate() {
            let t = match &fb {
                Some(f) => c * f,
                None => c.clone(),
            };
            if negate {
                num[ob + i] -= t;
            } else {
                num[ob + i] += t;
            }
        }
        Self::from_parts(lo, num, den)
    }

    fn mul_impl(&self, rhs: &QLaurent) -> QLaurent {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + rhs.num.len() - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.num.iter().enumerate() {
                if !y.is_zero() {
                    num[i + j] += x * y;
                }
            }
        }
        Self::from_parts(self.lo + rhs.lo, num, &self.den * &rhs.den)
    }

    /// Integer coefficients of `q^min_exp ..= q^max_exp` and the shared
    /// denominator.
    pub(crate) fn raw(&self) -> (i32, &[BigInt], &BigInt) {
        (self.lo, &self.num, &self.den)
    }
}

impl Default for QLaurent {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for QLaurent {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigRational> for QLaurent {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl Neg for &QLaurent {
    type Output = QLaurent;
    fn neg(self) -> QLaurent {
        QLaurent {
            lo: self.lo,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(mut self) -> QLaurent {
        for c in self.num.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &QLaurent) -> QLaurent {
                $body(self, rhs)
            }
        }
        impl $tr<QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                $body(&self, &rhs)
            }
        }
        impl $tr<&QLaurent> for QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: &QLaurent) -> QLaurent {
                $body(&self, rhs)
            }
        }
        impl $tr<QLaurent> for &QLaurent {
            type Output = QLaurent;
            fn $m(self, rhs: QLaurent) -> QLaurent {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QLaurent, b: &QLaurent| a.add_impl(b, false));
forward_binop!(Sub, sub, |a: &QLaurent, b: &QLaurent| a.add_impl(b, true));
forward_binop!(Mul, mul, |a: &QLaurent, b: &QLaurent| a.mul_impl(b));

impl AddAssign<&QLaurent> for QLaurent {
    fn add_assign(&mut self, rhs: &QLaurent) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&QLaurent> for QLaurent {
    fn sub_assign(&mut self, rhs: &QLaurent) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&QLaurent> for QLaurent {
    fn mul_assign(&mut self, rhs: &QLaurent) {
        *self = self.mul_impl(rhs);
    }
}

impl std::iter::Sum for QLaurent {
    fn sum<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QLaurent {
    fn product<I: Iterator<Item = QLaurent>>(iter: I) -> Self {
        iter.fold(QLaurent::one(), |a, b| a * b)
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::laurent_text(self))
    }
}

impl fmt::Debug for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QLaurent({self})")
    }
}
