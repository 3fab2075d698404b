//! q-integers, q-factorials, q-binomials, q-Pochhammer products, the
//! q-derivative, the polynomials `p_n(x, a)` and the q-exponential series.

use num_bigint::BigInt;
use num_traits::One;

use crate::exactalg::{MPoly, QLaurent, QRational, TruncSeries};

/// `binom(n, 2) = n (n - 1) / 2` for any integer `n`.
pub fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `binom(n, 3)` for `n >= 0`.
pub fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// Ordinary binomial coefficient; zero outside `0 <= k <= n`.
pub fn binomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > n as i64 {
        return BigInt::from(0);
    }
    let k = k as u32;
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `[n] = 1 + q + ... + q^(n-1)` for `n >= 0`, and `[n] = -q^n [-n]` for
/// `n < 0`.
pub fn q_int(n: i64) -> QLaurent {
    if n >= 0 {
        QLaurent::from_coeffs(0, &vec![1; n as usize])
    } else {
        QLaurent::from_coeffs(n as i32, &vec![-1; (-n) as usize])
    }
}

/// `[n]! = [1][2]...[n]`.
pub fn q_factorial(n: u32) -> QLaurent {
    (1..=n as i64).map(q_int).product()
}

/// Row `n` of the Gaussian binomial triangle, built with
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn q_binomial_row(n: u32) -> Vec<QLaurent> {
    let mut row = vec![QLaurent::one()];
    for m in 1..=n as usize {
        let mut next = Vec::with_capacity(m + 1);
        for k in 0..=m {
            let left = if k > 0 { row[k - 1].clone() } else { QLaurent::zero() };
            let right = if k < m {
                row[k].shift(k as i32)
            } else {
                QLaurent::zero()
            };
            next.push(left + right);
        }
        row = next;
    }
    row
}

/// Gaussian binomial `[n k]`; zero when `k < 0` or `k > n`.
pub fn q_binomial(n: u32, k: i64) -> QLaurent {
    if k < 0 || k > n as i64 {
        return QLaurent::zero();
    }
    q_binomial_row(n).swap_remove(k as usize)
}

/// `(t; q)_n = prod_{j<n} (1 - q^j t)`.
pub fn q_pochhammer(t: &MPoly, n: u32) -> MPoly {
    (0..n).map(|j| MPoly::one() - t.shift_q(j as i32)).product()
}

/// The q-derivative in `x`, `x^n -> [n] x^(n-1)`; `a` is a constant.
pub fn q_derivative(f: &MPoly) -> MPoly {
    MPoly::from_terms(
        f.terms()
            .filter(|(m, _)| m.0 > 0)
            .map(|(&(ex, ea), c)| ((ex - 1, ea), c * &q_int(ex as i64))),
    )
}

/// `p_n(x, a) = prod_{k<n} (x - q^k a)`.
pub fn p_poly(n: u32) -> MPoly {
    (0..n).map(|k| MPoly::x() - MPoly::a().shift_q(k as i32)).product()
}

/// `sum_k (-a)^k q^binom(k,2) [n k] x^(n-k)`, the expanded form of `p_n`.
pub fn p_poly_expanded(n: u32) -> MPoly {
    let row = q_binomial_row(n);
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = row[k as usize].shift(binom2(k as i64) as i32) * QLaurent::from_int(sign);
            MPoly::monomial(c, n - k, k)
        })
        .sum()
}

/// The q-exponential series `sum_n t^n / [n]!` truncated at `order`.
pub fn e_series(order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order);
    let mut fact = QLaurent::one();
    for n in 0..order {
        if n > 0 {
            fact = &fact * &q_int(n as i64);
        }
        coeffs.push(QRational::new(QLaurent::one(), fact.clone()).expect("[n]! is nonzero"));
    }
    TruncSeries::from_coeffs(coeffs)
}
