//! Truncated formal power series with `QRational` coefficients.

use std::fmt;
use std::ops::{Add, Sub};

use super::{QLaurent, QRational};
use crate::error::{Error, Result};

/// `sum_{n < order} c_n t^n`; indices at or beyond `order` are never read.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<QRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![QRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order > 0 {
            s.coeffs[0] = QRational::one();
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<QRational>) -> Self {
        TruncSeries { coeffs }
    }

    /// Pads with zeros (or truncates) to `order` coefficients.
    pub fn from_laurents<I: IntoIterator<Item = QLaurent>>(coeffs: I, order: usize) -> Self {
        let mut c: Vec<QRational> = coeffs.into_iter().take(order).map(QRational::from).collect();
        c.resize(order, QRational::zero());
        TruncSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[QRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &QRational {
        &self.coeffs[n]
    }

    /// Multiplies by `t^k`, dropping what falls past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, rhs: &TruncSeries) -> Result<TruncSeries> {
        if self.order() != rhs.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: rhs.order(),
            });
        }
        let n = self.order();
        let coeffs = (0..n)
            .map(|k| QRational::sum_of_products((0..=k).map(|i| (&self.coeffs[i], &rhs.coeffs[k - i]))))
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Multiplicative inverse; the constant term must be exactly one.
    pub fn inverse(&self) -> Result<TruncSeries> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut inv: Vec<QRational> = Vec::with_capacity(n);
        inv.push(QRational::one());
        for k in 1..n {
            let s = QRational::sum_of_products((1..=k).map(|j| (&self.coeffs[j], &inv[k - j])));
            inv.push(-&s);
        }
        Ok(TruncSeries { coeffs: inv })
    }

    /// Termwise q-derivative `t^n -> [n] t^(n-1)`; the order drops by one.
    pub fn q_derivative(&self) -> TruncSeries {
        let coeffs = (1..self.order())
            .map(|n| &self.coeffs[n] * &QRational::from(crate::qcore::q_int(n as i64)))
            .collect();
        TruncSeries { coeffs }
    }
}

impl Add<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&TruncSeries> for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        assert_eq!(self.order(), rhs.order(), "series orders differ");
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::series_text(self, "t"))
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> TruncSeries {
        TruncSeries::from_laurents(c.iter().map(|&v| QLaurent::from_int(v)), order)
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(s(&[1, 1], 3).mul(&s(&[1, -1], 3)).unwrap(), s(&[1, 0, -1], 3));
        let f = s(&[3, 0, 5], 4);
        assert_eq!(f.mul(&TruncSeries::one(4)).unwrap(), f);
        assert_eq!(s(&[1, 1, 1, 1], 4).mul(&s(&[1, -1], 4)).unwrap(), TruncSeries::one(4));
        assert_eq!(
            s(&[1], 3).mul(&s(&[1], 4)),
            Err(Error::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(&[1, -1], 4).inverse().unwrap(), s(&[1, 1, 1, 1], 4));
        assert_eq!(TruncSeries::one(5).inverse().unwrap(), TruncSeries::one(5));
        // 1 / (1 - [2] t) with [2] = 1 + q
        let two = QLaurent::from_coeffs(0, &[1, 1]);
        let f = TruncSeries::from_laurents([QLaurent::one(), -&two], 3);
        let expect = TruncSeries::from_laurents([QLaurent::one(), two.clone(), &two * &two], 3);
        assert_eq!(f.inverse().unwrap(), expect);
        assert_eq!(s(&[2, 1], 3).inverse(), Err(Error::NonUnitConstantTerm));
    }
}
