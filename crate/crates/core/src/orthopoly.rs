//! Orthogonal companions of the q-exponential polynomials: `h_n`, `g_n`,
//! the normalized `H_n`, the moment functionals `F_r` and `G_r`, their
//! three-term recurrences and norms.
//!
//! `F_r` sends `<x>_{r,n}` to `a^n` and `G_r` sends `<<x>>_{r,n}` to
//! `a^n`. Both are applied by expanding in the matching falling-factorial
//! basis, so `F_r(x^n) = phi_n(a, r)` and `G_r(x^n) = Phi_n(a, r)`.

use serde::{Deserialize, Serialize};

use crate::exactalg::{MPoly, QLaurent};
use crate::qcore::{binom2, p_poly, q_binomial_row, q_factorial, q_int, q_pochhammer};
use crate::report::CheckReport;
use crate::rstirling::{apply_u, apply_v, falling, falling_scaled, scaled_basis_factor, to_falling_basis, BasisKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FunctionalKind {
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MomentFunctional {
    pub kind: FunctionalKind,
    pub r: i64,
}

impl MomentFunctional {
    pub fn f(r: i64) -> Self {
        MomentFunctional {
            kind: FunctionalKind::F,
            r,
        }
    }

    pub fn g(r: i64) -> Self {
        MomentFunctional {
            kind: FunctionalKind::G,
            r,
        }
    }

    pub fn basis(&self) -> BasisKind {
        match self.kind {
            FunctionalKind::F => BasisKind::Plain,
            FunctionalKind::G => BasisKind::Scaled,
        }
    }

    /// Applies the functional to a polynomial in `x`; `a` passes through
    /// as a scalar. The result is free of `x`.
    pub fn apply(&self, f: &MPoly) -> MPoly {
        to_falling_basis(f, self.r, self.basis()).substitute(MPoly::a_pow)
    }
}

pub fn apply_functional(fun: MomentFunctional, f: &MPoly) -> MPoly {
    fun.apply(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum OrthKind {
    #[serde(rename = "h")]
    H,
    #[serde(rename = "g")]
    G,
    #[serde(rename = "H")]
    BigH,
}

impl OrthKind {
    pub fn functional(self, r: i64) -> MomentFunctional {
        match self {
            OrthKind::H => MomentFunctional::f(r),
            OrthKind::G | OrthKind::BigH => MomentFunctional::g(r),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrthKind::H => "h",
            OrthKind::G => "g",
            OrthKind::BigH => "H",
        }
    }
}

/// `sum_k (-a)^k q^binom(k,2) [n k] B_{n-k}` for a falling basis `B`.
fn binomial_sum(n: u32, basis: impl Fn(u32) -> MPoly) -> MPoly {
    let row = q_binomial_row(n);
    (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { QLaurent::one() } else { -QLaurent::one() };
            let c = (&sign * &row[k as usize]).shift(binom2(k as i64) as i32);
            basis(n - k).mul_monomial(&c, 0, k)
        })
        .sum()
}

/// `h_n(x, a, r)`, monic of degree `n` in `x`.
pub fn h_poly(n: u32, r: i64) -> MPoly {
    binomial_sum(n, |m| falling(m, r))
}

/// `g_n(x, a, r)`, with leading `x`-coefficient `q^(-binom(n,2) - r n)`.
pub fn g_poly(n: u32, r: i64) -> MPoly {
    binomial_sum(n, |m| falling_scaled(m, r))
}

/// `H_n = q^(binom(n,2) + r n) g_n`, monic in `x`.
pub fn big_h_poly(n: u32, r: i64) -> MPoly {
    g_poly(n, r).shift_q(scaled_basis_factor(n, r))
}

pub fn orth_poly(kind: OrthKind, n: u32, r: i64) -> MPoly {
    match kind {
        OrthKind::H => h_poly(n, r),
        OrthKind::G => g_poly(n, r),
        OrthKind::BigH => big_h_poly(n, r),
    }
}

/// A family `f_0, f_1, ...` computed once and reused.
#[derive(Debug, Clone)]
pub struct OrthFamily {
    pub kind: OrthKind,
    pub r: i64,
    polys: Vec<MPoly>,
}

impl OrthFamily {
    pub fn new(kind: OrthKind, r: i64, n_max: u32) -> Self {
        let polys = (0..=n_max).map(|n| orth_poly(kind, n, r)).collect();
        OrthFamily { kind, r, polys }
    }

    pub fn get(&self, n: u32) -> &MPoly {
        &self.polys[n as usize]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn functional(&self) -> MomentFunctional {
        self.kind.functional(self.r)
    }
}

/// `F_r(x^n h_n) = (q^r a)^n q^binom(n,2) [n]!`.
pub fn norm_h(n: u32, r: i64) -> MPoly {
    let e = r * n as i64 + binom2(n as i64);
    MPoly::monomial(q_factorial(n).shift(e as i32), 0, n)
}

/// `G_r(x^n H_n) = q^(2 binom(n,2) + 2 r n) [n]! a^n ((1-q) a; q)_n`.
pub fn norm_big_h(n: u32, r: i64) -> MPoly {
    let e = 2 * binom2(n as i64) + 2 * r * n as i64;
    let t = MPoly::a().scale(&QLaurent::from_coeffs(0, &[1, -1]));
    q_pochhammer(&t, n).mul_monomial(&q_factorial(n).shift(e as i32), 0, n)
}

/// `G_r(x^n g_n)`, i.e. the `H` norm rescaled by `q^(-binom(n,2) - r n)`.
pub fn norm_g(n: u32, r: i64) -> MPoly {
    norm_big_h(n, r).shift_q(-scaled_basis_factor(n, r))
}

pub fn norm(kind: OrthKind, n: u32, r: i64) -> MPoly {
    match kind {
        OrthKind::H => norm_h(n, r),
        OrthKind::G => norm_g(n, r),
        OrthKind::BigH => norm_big_h(n, r),
    }
}

/// Exponent of the leading `x`-coefficient `q^e` of `f_n`.
fn lead_shift(kind: OrthKind, n: u32, r: i64) -> i32 {
    match kind {
        OrthKind::G => -scaled_basis_factor(n, r),
        OrthKind::H | OrthKind::BigH => 0,
    }
}

/// `F(f_n f_k)`, the vanishing route `F(f_n) = c p_n(a, a)`, and for
/// `n == k` the closed-form norm.
pub fn check_orthogonality(kind: OrthKind, n: u32, k: u32, r: i64) -> CheckReport {
    let fun = kind.functional(r);
    let case = format!("{} n={n} k={k} r={r}", kind.name());
    let fnp = orth_poly(kind, n, r);
    let fkp = orth_poly(kind, k, r);
    let got = fun.apply(&(&fnp * &fkp));
    let expect = if n == k {
        norm(kind, n, r).shift_q(lead_shift(kind, n, r))
    } else {
        MPoly::zero()
    };
    if got != expect {
        return CheckReport::compare("orthogonality", case, &got, &expect);
    }
    // F(f_n) equals p_n(a, a) times the normalization of f_n.
    let scale = match kind {
        OrthKind::H | OrthKind::G => 0,
        OrthKind::BigH => scaled_basis_factor(n, r),
    };
    let vanishing = p_poly(n).substitute_x_to_a().shift_q(scale);
    let direct = fun.apply(&fnp);
    if direct != vanishing || (n > 0 && !direct.is_zero()) {
        return CheckReport::compare("orthogonality", case, &direct, &vanishing);
    }
    CheckReport::new("orthogonality", case, true)
}

/// `F(x^k f_n) = 0` for `k < n` and `F(x^n f_n) = norm`. Also
/// `F(f_n^2) = norm` times the leading coefficient of `f_n`.
pub fn check_moments(kind: OrthKind, n: u32, r: i64) -> CheckReport {
    let fun = kind.functional(r);
    let case = format!("{} moments n={n} r={r}", kind.name());
    let f = orth_poly(kind, n, r);
    for k in 0..n {
        let v = fun.apply(&f.mul_x_pow(k));
        if !v.is_zero() {
            return CheckReport::new("orthogonality", case, false).with_detail(format!("x^{k} moment is {v}"));
        }
    }
    let expect = norm(kind, n, r);
    let top = fun.apply(&f.mul_x_pow(n));
    if top != expect {
        return CheckReport::compare("orthogonality", case, &top, &expect);
    }
    let sq = fun.apply(&(&f * &f));
    CheckReport::compare("orthogonality", case, &sq, &expect.shift_q(lead_shift(kind, n, r)))
}

/// `x h_n = h_{n+1} + ([r] + q^r [n] + q^n a) h_n + q^(r+n-1) [n] a h_{n-1}`,
/// together with the equivalent form using `[n+r]`.
pub fn check_recurrence_h(n: u32, r: i64) -> CheckReport {
    let case = format!("h n={n} r={r}");
    if n == 0 {
        return CheckReport::new("recurrences", case, false).with_detail("requires n >= 1");
    }
    let ni = n as i64;
    let (hm, h, hp) = (h_poly(n - 1, r), h_poly(n, r), h_poly(n + 1, r));
    let lhs = h.mul_x_pow(1);
    let mid = MPoly::constant(q_int(r) + q_int(ni).shift(r as i32)) + MPoly::a().shift_q(n as i32);
    let low = MPoly::a().scale(&q_int(ni).shift((r + ni - 1) as i32));
    let rhs = &hp + &(&mid * &h) + &low * &hm;
    if lhs != rhs {
        return CheckReport::compare("recurrences", case, &lhs, &rhs);
    }
    let mid2 = MPoly::x() - MPoly::constant(q_int(ni + r)) - MPoly::a().shift_q(n as i32);
    let alt = &mid2 * &h - &low * &hm;
    CheckReport::compare("recurrences", case, &alt, &hp)
}

/// `x H_n = H_{n+1} + ([n+r] + q^(2n+r) a + q^(2n+r-1) a - q^(n+r-1) a) H_n
///   + q^(2(n-1)+2r) [n] a (1 + (q-1) q^(n-1) a) H_{n-1}`.
pub fn check_recurrence_big_h(n: u32, r: i64) -> CheckReport {
    let case = format!("H n={n} r={r}");
    if n == 0 {
        return CheckReport::new("recurrences", case, false).with_detail("requires n >= 1");
    }
    let (ni, ri) = (n as i64, r);
    let (hm, h, hp) = (big_h_poly(n - 1, r), big_h_poly(n, r), big_h_poly(n + 1, r));
    let lhs = h.mul_x_pow(1);
    let a = MPoly::a();
    let mid = MPoly::constant(q_int(ni + ri)) + a.shift_q((2 * ni + ri) as i32) + a.shift_q((2 * ni + ri - 1) as i32)
        - a.shift_q((ni + ri - 1) as i32);
    let qm1 = QLaurent::from_coeffs(0, &[-1, 1]);
    let bracket = MPoly::one() + a.scale(&qm1.shift((ni - 1) as i32));
    let low = (&a * &bracket).scale(&q_int(ni).shift((2 * (ni - 1) + 2 * ri) as i32));
    let rhs = &hp + &(&mid * &h) + &low * &hm;
    CheckReport::compare("recurrences", case, &lhs, &rhs)
}

/// The `g_n` recurrence before normalization, with leading factor
/// `q^(n+r)` on `g_{n+1}`.
pub fn check_recurrence_g(n: u32, r: i64) -> CheckReport {
    let case = format!("g n={n} r={r}");
    if n == 0 {
        return CheckReport::new("recurrences", case, false).with_detail("requires n >= 1");
    }
    let (ni, ri) = (n as i64, r);
    let (gm, g, gp) = (g_poly(n - 1, r), g_poly(n, r), g_poly(n + 1, r));
    let a = MPoly::a();
    let lhs = g.mul_x_pow(1);
    let mid = MPoly::constant(q_int(ri) + q_int(ni).shift(ri as i32))
        + a.shift_q((2 * ni + ri) as i32)
        + a.shift_q((2 * ni - 1 + ri) as i32)
        - a.shift_q((ni + ri - 1) as i32);
    let qn1 = QLaurent::q_pow(n as i32) - QLaurent::one();
    let low =
        a.scale(&q_int(ni).shift((ri + ni - 1) as i32)) + MPoly::a_pow(2).scale(&qn1.shift((2 * ni - 2 + ri) as i32));
    let rhs = gp.shift_q((ni + ri) as i32) + &mid * &g + &low * &gm;
    CheckReport::compare("recurrences", case, &lhs, &rhs)
}

/// `U_r h_n = p_n(x, a)` and `V_r g_n = p_n(x, a)`.
pub fn check_basis_images(n: u32, r: i64) -> CheckReport {
    let p = p_poly(n);
    let case = format!("basis n={n} r={r}");
    let uh = apply_u(&h_poly(n, r), r);
    if uh != p {
        return CheckReport::compare("recurrences", case, &uh, &p);
    }
    let vg = apply_v(&g_poly(n, r), r);
    CheckReport::compare("recurrences", case, &vg, &p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(c: &[i64]) -> QLaurent {
        QLaurent::from_coeffs(0, c)
    }

    #[test]
    fn h_examples() {
        assert_eq!(h_poly(0, 3), MPoly::one());
        for r in -1..4 {
            assert_eq!(h_poly(1, r), MPoly::x() - MPoly::constant(q_int(r)) - MPoly::a());
        }
        let x = MPoly::x();
        let a = MPoly::a();
        let expect = MPoly::x_pow(2) - &x - (&a * &x).scale(&l(&[1, 1])) + MPoly::a_pow(2).shift_q(1);
        assert_eq!(h_poly(2, 0), expect);
    }

    #[test]
    fn g_and_big_h_examples() {
        assert_eq!(g_poly(0, 2), MPoly::one());
        assert_eq!(g_poly(1, 0), MPoly::x() - MPoly::a());
        assert_eq!(g_poly(1, 1), (MPoly::x() - MPoly::one()).shift_q(-1) - MPoly::a());
        assert_eq!(big_h_poly(0, 2), MPoly::one());
        assert_eq!(big_h_poly(1, 1), MPoly::x() - MPoly::one() - MPoly::a().shift_q(1));
        assert_eq!(big_h_poly(1, 0), MPoly::x() - MPoly::a());
    }

    #[test]
    fn functional_examples() {
        for r in -1..4 {
            let f = MomentFunctional::f(r);
            let g = MomentFunctional::g(r);
            assert_eq!(f.apply(&MPoly::one()), MPoly::one());
            assert_eq!(f.apply(&MPoly::x()), MPoly::constant(q_int(r)) + MPoly::a());
            assert_eq!(
                g.apply(&MPoly::x()),
                MPoly::constant(q_int(r)) + MPoly::a().shift_q(r as i32)
            );
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_h(0, 2), MPoly::one());
        assert_eq!(norm_h(1, 3), MPoly::a().shift_q(3));
        assert_eq!(norm_h(2, 0), MPoly::a_pow(2).scale(&l(&[0, 1, 1])));
        assert_eq!(norm_big_h(0, 1), MPoly::one());
        let base = MPoly::a() + MPoly::a_pow(2).scale(&l(&[-1, 1]));
        assert_eq!(norm_big_h(1, 0), base);
        assert_eq!(norm_big_h(1, 1), base.shift_q(2));
    }

    #[test]
    fn recurrence_examples() {
        for r in 0..4 {
            assert!(check_recurrence_h(1, r).passed);
        }
        assert!(check_recurrence_big_h(1, 0).passed);
        assert!(check_recurrence_big_h(2, 1).passed);
        assert!(check_recurrence_g(2, 1).passed);
        for n in 0..8 {
            for r in 0..8 {
                assert_eq!(q_int(n + r), q_int(r) + q_int(n).shift(r as i32));
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        assert!(check_orthogonality(OrthKind::H, 1, 0, 0).passed);
        for n in 0..=4 {
            assert!(check_orthogonality(OrthKind::H, n, n, 1).passed);
        }
        assert!(check_orthogonality(OrthKind::BigH, 2, 1, 0).passed);
        assert!(check_orthogonality(OrthKind::G, 2, 2, 1).passed);
    }
}
