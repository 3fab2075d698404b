//! Classical q = 1 values checked against brute-force counts and explicit
//! sums that share no code with the library.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use qhankel_core::hankel::closed_form_theorem21;
use qhankel_core::{det_bareiss, stirling, MPoly, MomentFamily, StirlingTable};

/// Number of set partitions of `{0..n}`, by enumerating restricted growth
/// strings.
fn count_partitions(n: usize) -> u64 {
    fn go(pos: usize, n: usize, max: usize) -> u64 {
        if pos == n {
            return 1;
        }
        (0..=max + 1).map(|b| go(pos + 1, n, max.max(b))).sum()
    }
    if n == 0 {
        1
    } else {
        go(1, n, 0)
    }
}

fn int_binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `(1/k!) sum_j (-1)^(k-j) C(k,j) (j+r)^n`.
fn r_stirling_explicit(n: u32, k: u32, r: i64) -> BigRational {
    let mut s = BigInt::zero();
    for j in 0..=k {
        let term = int_binom(k as u64, j as u64) * BigInt::from(j as i64 + r).pow(n);
        if (k - j).is_multiple_of(2) {
            s += term;
        } else {
            s -= term;
        }
    }
    let fact: BigInt = (1..=k as u64).map(BigInt::from).product();
    BigRational::new(s, fact)
}

#[test]
fn bell_numbers_by_brute_force() {
    let expect = [1u64, 1, 2, 5, 15, 52];
    let t = StirlingTable::new(0, 7);
    for n in 0..=7u32 {
        let brute = count_partitions(n as usize);
        if (n as usize) < expect.len() {
            assert_eq!(brute, expect[n as usize]);
        }
        let v = t.phi(n).eval_q1(&BigRational::one(), &BigRational::zero());
        assert_eq!(v, BigRational::from_integer(brute.into()), "n={n}");
    }
}

#[test]
fn r_stirling_explicit_sum() {
    for r in 0..=3 {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    stirling(n, k, r).eval_at_one(),
                    r_stirling_explicit(n, k, r),
                    "n={n} k={k} r={r}"
                );
            }
        }
    }
}

#[test]
fn classical_hankel_determinant() {
    for n in 1..=5u32 {
        let h = qhankel_core::build_hankel(MomentFamily::Phi, n, 0, 0);
        let det = det_bareiss(&h.matrix).unwrap().at_q_one();
        let superfactorial: BigInt = (0..n as u64)
            .map(|k| (1..=k).map(BigInt::from).product::<BigInt>())
            .product();
        let binom2 = n * (n - 1) / 2;
        let expect = MPoly::monomial(qhankel_core::QLaurent::constant(superfactorial.into()), binom2, 0);
        assert_eq!(det, expect);
        assert_eq!(closed_form_theorem21(n, 0, 0).unwrap().at_q_one(), expect);
    }
}
