//! Symbolic checks of the identities satisfied by `S(n, k, r)`, `phi_n`
//! and `Phi_n`.

use num_bigint::BigInt;

use super::{apply_op_a, apply_op_a_composite, conj_derivative_times_x, falling, StirlingTable};
use crate::exactalg::{MPoly, QLaurent, QRational, TruncSeries};
use crate::qcore::{binomial, e_series, q_binomial_row, q_derivative, q_int};
use crate::report::CheckReport;

fn q_minus_one() -> QLaurent {
    QLaurent::from_coeffs(0, &[-1, 1])
}

fn int(c: BigInt) -> QLaurent {
    QLaurent::constant(c.into())
}

/// `sum_k S(n, k, r) <x>_{r,k} = x^n`.
pub fn check_falling_expansion(n: u32, r: i64) -> CheckReport {
    let t = StirlingTable::new(r, n);
    let lhs: MPoly = (0..=n).map(|k| falling(k, r).scale(&t.get(n, k))).sum();
    CheckReport::compare("expansion", format!("n={n} r={r}"), &lhs, &MPoly::x_pow(n))
}

/// Expands `z^k / prod_{j=0}^{k} (1 - [r+j] z)` to `order` terms and
/// compares each coefficient with `S(n, k, r)`. Every coefficient must
/// reduce to a Laurent polynomial.
pub fn check_generating_function(k: u32, r: i64, order: usize) -> CheckReport {
    let case = format!("k={k} r={r} order={order}");
    if order <= k as usize {
        return CheckReport::new("gf", case, false).with_detail("order must exceed k");
    }
    let mut den = TruncSeries::one(order);
    for j in 0..=k as i64 {
        let factor = TruncSeries::from_laurents([QLaurent::one(), -q_int(r + j)], order);
        den = den.mul(&factor).expect("equal orders");
    }
    let rhs = den.inverse().expect("constant term is one").shift(k as usize);
    let table = StirlingTable::new(r, order as u32 - 1);
    for n in 0..order {
        let c = rhs.coeff(n);
        let Some(c) = c.as_laurent() else {
            return CheckReport::new("gf", case, false)
                .with_detail(format!("coefficient {n} has denominator {}", c.den()));
        };
        let s = table.get(n as u32, k);
        if *c != s {
            return CheckReport::new("gf", case, false)
                .with_detail(format!("coefficient {n}: series {c}, recurrence {s}"));
        }
    }
    CheckReport::new("gf", case, true)
}

/// Checks `e(x) Phi_n(x, r) = sum_{k < order} [r+k]^n x^k / [k]!` as
/// truncated series, and the eigen-relation
/// `(x D)^n x^(r+k) = [r+k]^n x^(r+k)` for every `k < order` with
/// `r + k >= 0`.
pub fn check_dobinski(n: u32, r: i64, order: usize) -> CheckReport {
    let case = format!("n={n} r={r} order={order}");
    if order < n as usize + 2 {
        return CheckReport::new("dobinski", case, false).with_detail("order must be at least n + 2");
    }
    let e = e_series(order);
    let phi = StirlingTable::new(r, n).bigphi(n);
    let phi_series = TruncSeries::from_laurents((0..order as u32).map(|k| phi.coeff(k, 0)), order);
    let lhs = e.mul(&phi_series).expect("equal orders");
    let rhs = TruncSeries::from_coeffs(
        (0..order)
            .map(|k| {
                let num = QRational::from(q_int(r + k as i64).pow(n));
                &num * e.coeff(k)
            })
            .collect(),
    );
    if lhs != rhs {
        let bad = (0..order).find(|&k| lhs.coeff(k) != rhs.coeff(k)).unwrap();
        return CheckReport::new("dobinski", case, false).with_detail(format!(
            "coefficient {bad}: e*Phi = {}, sum = {}",
            lhs.coeff(bad),
            rhs.coeff(bad)
        ));
    }
    for k in 0..order as i64 {
        let m = r + k;
        if m < 0 {
            continue;
        }
        let start = MPoly::x_pow(m as u32);
        let mut img = start.clone();
        for _ in 0..n {
            img = q_derivative(&img).mul_x_pow(1);
        }
        if img != start.scale(&q_int(m).pow(n)) {
            return CheckReport::new("dobinski", case, false).with_detail(format!("eigen-relation fails at k={k}"));
        }
    }
    CheckReport::new("dobinski", case, true)
}

/// The identities relating `S(n, k, r)` and `phi_n` to ordinary and
/// Gaussian binomial sums; one report per identity.
pub fn check_remark_identities(n: u32, r: i64) -> Vec<CheckReport> {
    let qm1 = q_minus_one();
    let table = StirlingTable::new(r, n);
    let rows: Vec<Vec<QLaurent>> = (0..=n).map(q_binomial_row).collect();
    let gauss = |i: u32, k: u32| rows[i as usize].get(k as usize).cloned().unwrap_or_default();
    let sign = |e: u32| {
        if e.is_multiple_of(2) {
            QLaurent::one()
        } else {
            -QLaurent::one()
        }
    };
    let mut out = Vec::new();

    // sum_k (-1)^(n-k) C(n,k) sum_j [k j] (q-1)^j q^(r(k-j)) x^j
    let phi_expanded: MPoly = (0..=n)
        .map(|k| {
            let inner: MPoly = (0..=k)
                .map(|j| {
                    let c = &gauss(k, j) * &qm1.pow(j).shift((r * (k - j) as i64) as i32);
                    MPoly::monomial(c, j, 0)
                })
                .sum();
            inner.scale(&(&sign(n - k) * &int(binomial(n, k as i64))))
        })
        .sum();

    // (q-1)^(n-k) q^(rk) S(n,k,r) = sum_i (-1)^(n-i) q^(ri) C(n,i) [i k]
    let mut ok_stirling = true;
    let mut detail = None;
    for k in 0..=n {
        let lhs = (&qm1.pow(n - k) * &table.get(n, k)).shift((r * k as i64) as i32);
        let rhs: QLaurent = (0..=n)
            .map(|i| &(&sign(n - i) * &int(binomial(n, i as i64))) * &gauss(i, k).shift((r * i as i64) as i32))
            .sum();
        // The x^k coefficient of the expanded phi sum equals (q-1)^k q^(-rk) times rhs.
        let from_expanded = phi_expanded.coeff(k, 0).shift((r * k as i64) as i32);
        if lhs != rhs || from_expanded != &qm1.pow(k) * &rhs {
            ok_stirling = false;
            detail = Some(format!("k={k}: lhs {lhs}, rhs {rhs}"));
            break;
        }
    }
    let mut rep = CheckReport::new("remark", format!("stirling-binomial n={n} r={r}"), ok_stirling);
    if let Some(d) = detail {
        rep = rep.with_detail(d);
    }
    out.push(rep);

    // sum_k [n k] (q-1)^k q^(r(n-k)) <x>_{r,k} = (1 - (1-q) x)^n = sum_k C(n,k) (q-1)^k x^k
    let falling_sum: MPoly = (0..=n)
        .map(|k| falling(k, r).scale(&(&gauss(n, k) * &qm1.pow(k)).shift((r * (n - k) as i64) as i32)))
        .sum();
    let power = (MPoly::one() + MPoly::x().scale(&qm1)).pow(n);
    let expanded: MPoly = (0..=n)
        .map(|k| MPoly::monomial(&int(binomial(n, k as i64)) * &qm1.pow(k), k, 0))
        .sum();
    let ok = falling_sum == power && power == expanded;
    out.push(CheckReport::new("remark", format!("falling-binomial n={n} r={r}"), ok));

    // sum_k [n k] (q-1)^k q^(r(n-k)) x^k = sum_k C(n,k) (q-1)^k phi_k(x, r)
    let gauss_sum: MPoly = (0..=n)
        .map(|k| MPoly::monomial((&gauss(n, k) * &qm1.pow(k)).shift((r * (n - k) as i64) as i32), k, 0))
        .sum();
    let phi_sum: MPoly = (0..=n)
        .map(|k| table.phi(k).scale(&(&int(binomial(n, k as i64)) * &qm1.pow(k))))
        .sum();
    out.push(CheckReport::compare(
        "remark",
        format!("phi-binomial n={n} r={r}"),
        &gauss_sum,
        &phi_sum,
    ));

    // (q-1)^n phi_n(x, r) = phi_expanded
    let scaled_phi = table.phi(n).scale(&qm1.pow(n));
    out.push(CheckReport::compare(
        "remark",
        format!("phi-inverse n={n} r={r}"),
        &scaled_phi,
        &phi_expanded,
    ));
    out
}

/// `Phi_n` against its two operator recurrences, and the assembled
/// operator against its monomial rule.
pub fn check_bigphi_recurrences(n: u32, r: i64) -> CheckReport {
    let case = format!("bigphi n={n} r={r}");
    if n == 0 {
        let ok = StirlingTable::new(r, 0).bigphi(0).is_one();
        return CheckReport::new("recurrences", case, ok);
    }
    let t = StirlingTable::new(r, n);
    let prev = t.bigphi(n - 1);
    let cur = t.bigphi(n);
    let via_a = apply_op_a(&prev, r);
    if via_a != cur {
        return CheckReport::compare("recurrences", case, &via_a, &cur);
    }
    let q = QLaurent::q_pow(1);
    let alt = prev.substitute_x_scale(&q).mul_x_pow(1).shift_q(r as i32) + conj_derivative_times_x(&prev, r);
    if alt != cur {
        return CheckReport::compare("recurrences", case, &alt, &cur);
    }
    let composite = apply_op_a_composite(&prev, r);
    CheckReport::compare("recurrences", case, &composite, &via_a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generating_function_examples() {
        assert!(check_generating_function(0, 0, 5).passed);
        assert!(check_generating_function(0, 1, 4).passed);
        assert!(check_generating_function(1, 0, 4).passed);
        assert!(!check_generating_function(4, 0, 4).passed);
    }

    #[test]
    fn dobinski_examples() {
        assert!(check_dobinski(0, 0, 3).passed);
        assert!(check_dobinski(1, 0, 4).passed);
        assert!(check_dobinski(2, 1, 6).passed);
        assert!(!check_dobinski(3, 0, 4).passed);
    }

    #[test]
    fn remark_examples() {
        for r in 0..3 {
            assert!(check_remark_identities(0, r).iter().all(|c| c.passed));
        }
        // (q-1) S(2,1,0) = sum_i (-1)^(2-i) C(2,i) [i 1] = q - 1
        let qm1 = q_minus_one();
        assert_eq!(&qm1 * &super::super::stirling(2, 1, 0), qm1);
        // q^r - (q-1)[r] = 1
        for r in -3..5 {
            assert_eq!(QLaurent::q_pow(r as i32) - &qm1 * &q_int(r), QLaurent::one());
        }
        let reps = check_remark_identities(1, 2);
        assert_eq!(reps.len(), 4);
        assert!(reps.iter().all(|c| c.passed), "{reps:?}");
    }

    #[test]
    fn recurrence_examples() {
        for r in 0..3 {
            for n in 0..5 {
                assert!(check_bigphi_recurrences(n, r).passed);
                assert!(check_falling_expansion(n, r).passed);
            }
        }
    }
}
