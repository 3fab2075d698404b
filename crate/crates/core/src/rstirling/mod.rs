//! Generalized q-Stirling numbers `S(n, k, r)`, the falling factorials
//! `<x>_{r,k}` and their scaled variant, basis conversion, the two
//! q-exponential polynomial families and the operators acting on them.

mod checks;

pub use checks::{
    check_bigphi_recurrences, check_dobinski, check_falling_expansion, check_generating_function,
    check_remark_identities,
};

use serde::{Deserialize, Serialize};

use crate::exactalg::{MPoly, QLaurent};
use crate::qcore::{binom2, q_derivative, q_int};

/// Triangle of `S(n, k, r)` for `0 <= k <= n <= n_max`.
///
/// `S(0, k, r) = [k = 0]`, `S(n, k, r) = S(n-1, k-1, r) + [k+r] S(n-1, k, r)`,
/// which forces `S(n, 0, r) = [r]^n` and `S(n, k, r) = 0` for `k > n`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    r: i64,
    rows: Vec<Vec<QLaurent>>,
}

impl StirlingTable {
    pub fn new(r: i64, n_max: u32) -> Self {
        let mut rows: Vec<Vec<QLaurent>> = vec![vec![QLaurent::one()]];
        for n in 1..=n_max as usize {
            let prev = &rows[n - 1];
            let row = (0..=n)
                .map(|k| {
                    let left = if k > 0 { prev[k - 1].clone() } else { QLaurent::zero() };
                    let right = if k < n {
                        &prev[k] * &q_int(k as i64 + r)
                    } else {
                        QLaurent::zero()
                    };
                    left + right
                })
                .collect();
            rows.push(row);
        }
        StirlingTable { r, rows }
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn n_max(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    /// `S(n, k, r)`; panics if `n` exceeds the table.
    pub fn get(&self, n: u32, k: u32) -> QLaurent {
        let row = &self.rows[n as usize];
        row.get(k as usize).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: u32) -> &[QLaurent] {
        &self.rows[n as usize]
    }

    /// `phi_n(x, r) = sum_k S(n, k, r) x^k`.
    pub fn phi(&self, n: u32) -> MPoly {
        MPoly::from_terms(self.row(n).iter().enumerate().map(|(k, s)| ((k as u32, 0), s.clone())))
    }

    /// `Phi_n(x, r) = sum_k S(n, k, r) q^binom(k,2) (q^r x)^k`.
    pub fn bigphi(&self, n: u32) -> MPoly {
        let r = self.r;
        MPoly::from_terms(self.row(n).iter().enumerate().map(|(k, s)| {
            let k = k as i64;
            ((k as u32, 0), s.shift((binom2(k) + r * k) as i32))
        }))
    }
}

pub fn stirling(n: u32, k: u32, r: i64) -> QLaurent {
    if k > n {
        return QLaurent::zero();
    }
    StirlingTable::new(r, n).get(n, k)
}

/// `<x>_{r,k} = prod_{j<k} (x - [r+j])`.
pub fn falling(k: u32, r: i64) -> MPoly {
    (0..k as i64)
        .map(|j| MPoly::x() - MPoly::constant(q_int(r + j)))
        .product()
}

/// `q^(r k + binom(k,2))` relating the two falling-factorial bases.
pub fn scaled_basis_factor(k: u32, r: i64) -> i32 {
    (binom2(k as i64) + r * k as i64) as i32
}

/// `<<x>>_{r,k} = q^(-binom(k,2) - r k) <x>_{r,k}`.
pub fn falling_scaled(k: u32, r: i64) -> MPoly {
    falling(k, r).shift_q(-scaled_basis_factor(k, r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    /// `<x>_{r,k}`
    Plain,
    /// `<<x>>_{r,k}`
    Scaled,
}

impl BasisKind {
    pub fn element(self, k: u32, r: i64) -> MPoly {
        match self {
            BasisKind::Plain => falling(k, r),
            BasisKind::Scaled => falling_scaled(k, r),
        }
    }
}

/// Coefficients of a polynomial in a falling-factorial basis. Each
/// coefficient is free of `x` but may depend on `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FallingBasisCoeffs {
    pub r: i64,
    pub kind: BasisKind,
    pub coeffs: Vec<MPoly>,
}

impl FallingBasisCoeffs {
    pub fn reconstruct(&self) -> MPoly {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * &self.kind.element(k as u32, self.r))
            .sum()
    }

    /// Replaces basis element `k` by `image(k)`.
    pub fn substitute(&self, image: impl Fn(u32) -> MPoly) -> MPoly {
        self.coeffs.iter().enumerate().map(|(k, c)| c * &image(k as u32)).sum()
    }
}

/// Expands `f` in the falling-factorial basis by repeated synthetic
/// division by `x - [r], x - [r+1], ...`.
pub fn to_falling_basis(f: &MPoly, r: i64, kind: BasisKind) -> FallingBasisCoeffs {
    let mut cur = f.x_coeffs();
    if cur.is_empty() {
        return FallingBasisCoeffs {
            r,
            kind,
            coeffs: vec![MPoly::zero()],
        };
    }
    let mut coeffs = Vec::with_capacity(cur.len());
    let mut j = 0i64;
    while cur.len() > 1 {
        let root = q_int(r + j);
        let m = cur.len() - 1;
        let mut quot = vec![MPoly::zero(); m];
        quot[m - 1] = cur[m].clone();
        for i in (1..m).rev() {
            quot[i - 1] = &cur[i] + &quot[i].scale(&root);
        }
        coeffs.push(&cur[0] + &quot[0].scale(&root));
        cur = quot;
        j += 1;
    }
    coeffs.push(cur.pop().unwrap());
    if kind == BasisKind::Scaled {
        for (k, c) in coeffs.iter_mut().enumerate() {
            *c = c.shift_q(scaled_basis_factor(k as u32, r));
        }
    }
    FallingBasisCoeffs { r, kind, coeffs }
}

pub fn phi(n: u32, r: i64) -> MPoly {
    StirlingTable::new(r, n).phi(n)
}

pub fn bigphi(n: u32, r: i64) -> MPoly {
    StirlingTable::new(r, n).bigphi(n)
}

/// Linear map defined monomially by `x^n -> [r+n] x^n + q^(r+n) x^(n+1)`.
pub fn apply_op_a(f: &MPoly, r: i64) -> MPoly {
    let mut out = MPoly::zero();
    for (&(ex, ea), c) in f.terms() {
        let n = ex as i64;
        out += &MPoly::monomial(c * &q_int(r + n), ex, ea);
        out += &MPoly::monomial(c.shift((r + n) as i32), ex + 1, ea);
    }
    out
}

/// `x^n -> x^(n+1) + [r+n] x^n`.
pub fn apply_op_u_conj(f: &MPoly, r: i64) -> MPoly {
    f.mul_x_pow(1) + conj_derivative_times_x(f, r)
}

/// `x * x^(-r) D x^r`, acting as `x^n -> [r+n] x^n`.
pub fn conj_derivative_times_x(f: &MPoly, r: i64) -> MPoly {
    MPoly::from_terms(f.terms().map(|(&(ex, ea), c)| ((ex, ea), c * &q_int(r + ex as i64))))
}

/// `x (q^r + (q-1) q^r x D + x^(-r) D x^r)` assembled from its parts,
/// to be compared with the monomial rule in [`apply_op_a`].
pub fn apply_op_a_composite(f: &MPoly, r: i64) -> MPoly {
    let qm1 = QLaurent::from_coeffs(0, &[-1, 1]);
    let first = f.mul_x_pow(1).shift_q(r as i32);
    let second = q_derivative(f).mul_x_pow(2).scale(&qm1.shift(r as i32));
    first + second + conj_derivative_times_x(f, r)
}

/// `U_r`: substitutes `<x>_{r,k} -> x^k`.
pub fn apply_u(f: &MPoly, r: i64) -> MPoly {
    to_falling_basis(f, r, BasisKind::Plain).substitute(MPoly::x_pow)
}

/// `V_r`: substitutes `<<x>>_{r,k} -> x^k`.
pub fn apply_v(f: &MPoly, r: i64) -> MPoly {
    to_falling_basis(f, r, BasisKind::Scaled).substitute(MPoly::x_pow)
}
