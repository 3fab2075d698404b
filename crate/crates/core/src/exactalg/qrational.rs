//! Rational functions in `q`, reduced to lowest terms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::{intpoly, QLaurent};
use crate::error::{Error, Result};

/// `num / den` with `gcd(num, den) = 1`, `den` monic (leading coefficient
/// one) and `den` free of negative or positive powers of `q` as a factor
/// (lowest exponent zero).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QLaurent,
    den: QLaurent,
}

impl QRational {
    pub fn zero() -> Self {
        QRational {
            num: QLaurent::zero(),
            den: QLaurent::one(),
        }
    }

    pub fn one() -> Self {
        QRational {
            num: QLaurent::one(),
            den: QLaurent::one(),
        }
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QRational {
            num: p,
            den: QLaurent::one(),
        }
    }

    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in the Laurent ring.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &QRational) -> Result<Self> {
        Ok(self * &rhs.recip()?)
    }

    /// Canonical form of `num / den`; `den` must be nonzero.
    pub(crate) fn reduce(num: QLaurent, den: QLaurent) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QRational { num, den };
        }
        let (lo_n, nn, dn) = num.raw();
        let (lo_d, nd, dd) = den.raw();
        // num/den = q^(lo_n-lo_d) * (nn/dn) / (nd/dd)
        let g = intpoly::gcd(nn, nd);
        let (nn, nd) = if g.len() > 1 {
            (
                intpoly::div_exact(nn, &g).expect("gcd divides numerator"),
                intpoly::div_exact(nd, &g).expect("gcd divides denominator"),
            )
        } else {
            (nn.to_vec(), nd.to_vec())
        };
        let lead = nd.last().unwrap().clone();
        let num = QLaurent::from_parts(lo_n - lo_d, nn.into_iter().map(|c| c * dd).collect(), dn * &lead);
        let den = QLaurent::from_parts(0, nd, lead);
        QRational { num, den }
    }

    /// Sums values sharing large denominators without reducing at every
    /// step; the result is reduced once.
    pub fn sum_of_products<'a, I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (&'a QRational, &'a QRational)>,
    {
        let mut acc_num = QLaurent::zero();
        let mut acc_den = QLaurent::one();
        for (x, y) in pairs {
            if x.is_zero() || y.is_zero() {
                continue;
            }
            let n = &x.num * &y.num;
            let d = if x.den.is_one() {
                y.den.clone()
            } else if y.den.is_one() {
                x.den.clone()
            } else {
                &x.den * &y.den
            };
            accumulate(&mut acc_num, &mut acc_den, n, d);
        }
        Self::reduce(acc_num, acc_den)
    }

    fn add_impl(&self, rhs: &QRational, negate: bool) -> QRational {
        let rn = if negate { -&rhs.num } else { rhs.num.clone() };
        let mut num = self.num.clone();
        let mut den = self.den.clone();
        accumulate(&mut num, &mut den, rn, rhs.den.clone());
        Self::reduce(num, den)
    }

    fn mul_impl(&self, rhs: &QRational) -> QRational {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Self::from_laurent(&self.num * &rhs.num);
        }
        Self::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }

    pub fn eval_at_one(&self) -> Result<BigRational> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval_at_one() / d)
    }
}

/// `acc_num/acc_den += n/d`, reusing the larger denominator when one
/// divides the other.
fn accumulate(acc_num: &mut QLaurent, acc_den: &mut QLaurent, n: QLaurent, d: QLaurent) {
    if n.is_zero() {
        return;
    }
    if d == *acc_den {
        *acc_num += &n;
    } else if let Ok(f) = acc_den.exact_div(&d) {
        acc_num.add_mul_assign(&n, &f);
    } else if let Ok(f) = d.exact_div(acc_den) {
        *acc_num = &*acc_num * &f + n;
        *acc_den = d;
    } else {
        *acc_num = &*acc_num * &d + &n * &*acc_den;
        *acc_den = &*acc_den * &d;
    }
}

impl Default for QRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QLaurent> for QRational {
    fn from(p: QLaurent) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        Self::from_laurent(QLaurent::from_int(c))
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Add<&QRational> for &QRational {
    type Output = QRational;
    fn add(self, rhs: &QRational) -> QRational {
        self.add_impl(rhs, false)
    }
}

impl Sub<&QRational> for &QRational {
    type Output = QRational;
    fn sub(self, rhs: &QRational) -> QRational {
        self.add_impl(rhs, true)
    }
}

impl Mul<&QRational> for &QRational {
    type Output = QRational;
    fn mul(self, rhs: &QRational) -> QRational {
        self.mul_impl(rhs)
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::qrational_text(self))
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRational({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(lo: i32, c: &[i64]) -> QLaurent {
        QLaurent::from_coeffs(lo, c)
    }

    #[test]
    fn reduces_common_factors() {
        // (1 - q^2) / (1 - q) = 1 + q
        let r = QRational::new(l(0, &[1, 0, -1]), l(0, &[1, -1])).unwrap();
        assert_eq!(r, QRational::from_laurent(l(0, &[1, 1])));
        assert!(r.is_laurent());
    }

    #[test]
    fn denominator_is_monic_with_zero_valuation() {
        // q / (2 q^3 + 2 q^4) = (1/2) q^-2 / (1 + q)
        let r = QRational::new(l(1, &[1]), l(3, &[2, 2])).unwrap();
        assert_eq!(r.den(), &l(0, &[1, 1]));
        assert_eq!(r.num(), &QLaurent::monomial(BigRational::new(1.into(), 2.into()), -2));
    }

    #[test]
    fn arithmetic_round_trip() {
        let a = QRational::new(l(0, &[1]), l(0, &[1, 1])).unwrap();
        let b = QRational::new(l(0, &[1]), l(0, &[1, 1, 1])).unwrap();
        let s = &a + &b;
        assert_eq!(&s - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(&a * &a.recip().unwrap(), QRational::one());
        assert_eq!(
            QRational::new(QLaurent::one(), QLaurent::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn sum_of_products_matches_pairwise() {
        let a = QRational::new(l(0, &[2, 1]), l(0, &[1, 1])).unwrap();
        let b = QRational::new(l(-1, &[1]), l(0, &[1, 2, 2, 1])).unwrap();
        let c = QRational::from_laurent(l(0, &[0, 3]));
        let direct = &(&a * &b) + &(&c * &a);
        assert_eq!(QRational::sum_of_products([(&a, &b), (&c, &a)]), direct);
    }
}
