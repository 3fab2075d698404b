//! Hankel matrices of the moment sequences `phi_m(x, r)` and `Phi_m(x, r)`,
//! exact determinants, and the closed forms they are compared against.
//!
//! Two determinant routes are kept deliberately independent: one-step
//! fraction-free (Bareiss) elimination, where every division is exact, and
//! Laplace cofactor expansion.

use std::fmt;
use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::render::mpoly_json_value;
use crate::exactalg::{MPoly, QLaurent};
use crate::orthopoly::{big_h_poly, h_poly, norm_big_h, norm_h};
use crate::qcore::{binom2, binom3, q_binomial_row, q_factorial, q_int, q_pochhammer};
use crate::report::CheckReport;
use crate::rstirling::StirlingTable;

/// Largest dimension accepted by [`det_cofactor`].
pub const COFACTOR_MAX_DIM: usize = 8;

/// Largest dimension cross-checked by cofactor expansion during theorem
/// verification.
pub const CROSS_CHECK_MAX_DIM: u32 = 4;

#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<MPoly>,
}

impl SquareMatrix {
    pub fn from_rows(rows: Vec<Vec<MPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> MPoly) -> Self {
        let entries = (0..n * n).map(|idx| f(idx / n, idx % n)).collect();
        SquareMatrix { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &MPoly {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<MPoly>> {
        self.entries.chunks(self.n.max(1)).map(|c| c.to_vec()).collect()
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MomentFamily {
    Phi,
    BigPhi,
}

impl MomentFamily {
    pub fn theorem(self) -> Theorem {
        match self {
            MomentFamily::Phi => Theorem::T21,
            MomentFamily::BigPhi => Theorem::T31,
        }
    }
}

/// `n x n` matrix with entry `(i, j)` equal to `a_{i+j+offset}`.
#[derive(Debug, Clone)]
pub struct HankelMatrix {
    pub family: MomentFamily,
    pub offset: u32,
    pub r: i64,
    pub matrix: SquareMatrix,
}

impl HankelMatrix {
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn entry(&self, i: usize, j: usize) -> &MPoly {
        self.matrix.get(i, j)
    }
}

/// The moments `a_0 .. a_{len-1}` of a family.
pub fn moments(family: MomentFamily, len: u32, r: i64) -> Vec<MPoly> {
    if len == 0 {
        return Vec::new();
    }
    let t = StirlingTable::new(r, len - 1);
    (0..len)
        .map(|m| match family {
            MomentFamily::Phi => t.phi(m),
            MomentFamily::BigPhi => t.bigphi(m),
        })
        .collect()
}

pub fn build_hankel(family: MomentFamily, n: u32, offset: u32, r: i64) -> HankelMatrix {
    let seq = moments(family, 2 * n + offset, r);
    let n = n as usize;
    let matrix = SquareMatrix::from_fn(n, |i, j| seq[i + j + offset as usize].clone());
    HankelMatrix {
        family,
        offset,
        r,
        matrix,
    }
}

/// Determinant by one-step fraction-free elimination. A zero pivot is
/// replaced by a lower row (flipping the sign); a column with no nonzero
/// candidate means the matrix is singular and the result is zero.
pub fn det_bareiss(m: &SquareMatrix) -> Result<MPoly> {
    let n = m.dim();
    if n == 0 {
        return Ok(MPoly::one());
    }
    let mut a = m.rows();
    let mut negate = false;
    let mut prev = MPoly::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(MPoly::zero()),
            }
        }
        let (top, bottom) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let t = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = t.exact_div(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Determinant by Laplace expansion along the first row.
pub fn det_cofactor(m: &SquareMatrix) -> Result<MPoly> {
    let n = m.dim();
    if n > COFACTOR_MAX_DIM {
        return Err(Error::DimensionTooLarge {
            n,
            max: COFACTOR_MAX_DIM,
        });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(laplace(m, 0, &cols))
}

fn laplace(m: &SquareMatrix, row: usize, cols: &[usize]) -> MPoly {
    if cols.is_empty() {
        return MPoly::one();
    }
    let mut acc = MPoly::zero();
    for (idx, &c) in cols.iter().enumerate() {
        let e = m.get(row, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e * &laplace(m, row + 1, &rest);
        if idx % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}

fn product_of_q_factorials(n: u32) -> QLaurent {
    (0..n).map(q_factorial).product()
}

/// `prod_{j < m} [r + j]`.
fn rising_q_ints(m: u32, r: i64) -> QLaurent {
    (0..m as i64).map(|j| q_int(r + j)).product()
}

/// `sum_k [n k] q^binom(k,2) x^k prod_{j<n-k} [r+j]`.
pub fn theorem21_offset_sum(n: u32, r: i64) -> MPoly {
    let row = q_binomial_row(n);
    (0..=n)
        .map(|k| {
            let c = (&row[k as usize] * &rising_q_ints(n - k, r)).shift(binom2(k as i64) as i32);
            MPoly::monomial(c, k, 0)
        })
        .sum()
}

/// `sum_k [n k] (q^(n-1+r) x)^k prod_{j<n-k} [r+j]`.
pub fn theorem31_offset_sum(n: u32, r: i64) -> MPoly {
    let row = q_binomial_row(n);
    (0..=n)
        .map(|k| {
            let e = (n as i64 - 1 + r) * k as i64;
            let c = (&row[k as usize] * &rising_q_ints(n - k, r)).shift(e as i32);
            MPoly::monomial(c, k, 0)
        })
        .sum()
}

fn check_offset(offset: u32) -> Result<()> {
    if offset > 1 {
        return Err(Error::InvalidArgument(format!("no closed form for offset {offset}")));
    }
    Ok(())
}

/// `d(n,0) = q^binom(n,3) (q^r x)^binom(n,2) prod_{k<n} [k]!` and
/// `d(n,1) = d(n,0) * theorem21_offset_sum(n, r)`.
pub fn closed_form_theorem21(n: u32, offset: u32, r: i64) -> Result<MPoly> {
    check_offset(offset)?;
    let ni = n as i64;
    let e = binom3(ni) + r * binom2(ni);
    let d0 = MPoly::monomial(product_of_q_factorials(n).shift(e as i32), binom2(ni) as u32, 0);
    Ok(if offset == 0 {
        d0
    } else {
        &d0 * &theorem21_offset_sum(n, r)
    })
}

/// `D(n,0) = q^(2 binom(n,3) + 2 r binom(n,2)) x^binom(n,2)
/// prod_{k<n} [k]! ((1-q)x; q)_k` and `D(n,1) = D(n,0) * theorem31_offset_sum`.
pub fn closed_form_theorem31(n: u32, offset: u32, r: i64) -> Result<MPoly> {
    check_offset(offset)?;
    let ni = n as i64;
    let e = 2 * binom3(ni) + 2 * r * binom2(ni);
    let t = MPoly::x().scale(&QLaurent::from_coeffs(0, &[1, -1]));
    let poch: MPoly = (0..n).map(|k| q_pochhammer(&t, k)).product();
    let d0 = poch.mul_monomial(&product_of_q_factorials(n).shift(e as i32), binom2(ni) as u32, 0);
    Ok(if offset == 0 {
        d0
    } else {
        &d0 * &theorem31_offset_sum(n, r)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    #[serde(rename = "2.1")]
    T21,
    #[serde(rename = "3.1")]
    T31,
}

impl Theorem {
    pub fn family(self) -> MomentFamily {
        match self {
            Theorem::T21 => MomentFamily::Phi,
            Theorem::T31 => MomentFamily::BigPhi,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Theorem::T21 => "2.1",
            Theorem::T31 => "3.1",
        }
    }

    pub fn closed_form(self, n: u32, offset: u32, r: i64) -> Result<MPoly> {
        match self {
            Theorem::T21 => closed_form_theorem21(n, offset, r),
            Theorem::T31 => closed_form_theorem31(n, offset, r),
        }
    }

    /// `prod_{i<n} norm_i` with `a -> x`.
    pub fn norm_product(self, n: u32, r: i64) -> MPoly {
        (0..n)
            .map(|i| match self {
                Theorem::T21 => norm_h(i, r),
                Theorem::T31 => norm_big_h(i, r),
            })
            .product::<MPoly>()
            .substitute_a_to_x()
    }

    /// `(-1)^n f_n(0, a, r)` with `a -> x`, for the monic orthogonal family.
    pub fn signed_constant_term(self, n: u32, r: i64) -> MPoly {
        let p = match self {
            Theorem::T21 => h_poly(n, r),
            Theorem::T31 => big_h_poly(n, r),
        };
        let v = p.eval_x_zero().substitute_a_to_x();
        if n.is_multiple_of(2) {
            v
        } else {
            -v
        }
    }

    pub fn offset_sum(self, n: u32, r: i64) -> MPoly {
        match self {
            Theorem::T21 => theorem21_offset_sum(n, r),
            Theorem::T31 => theorem31_offset_sum(n, r),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One `(theorem, n, r, offset)` case.
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub n: u32,
    pub r: i64,
    pub offset: u32,
    pub oracle_det: MPoly,
    pub closed_form: MPoly,
    /// `oracle_det == closed_form`.
    pub equal: bool,
    /// Bareiss against cofactor expansion; `None` when not run.
    pub cofactor_equal: Option<bool>,
    /// Offset 0: the norm-product route; offset 1: the constant-term route.
    pub route_equal: bool,
    /// Negative `r` lies outside the regime the closed forms are stated for.
    pub outside_regime: bool,
    pub elapsed_ms: u128,
    pub error: Option<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.equal && self.route_equal && self.cofactor_equal != Some(false) && self.error.is_none()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "theorem": self.theorem.label(),
            "n": self.n,
            "r": self.r,
            "offset": self.offset,
            "equal": self.equal,
            "oracle": mpoly_json_value(&self.oracle_det),
            "closed": mpoly_json_value(&self.closed_form),
            "elapsed_ms": self.elapsed_ms as u64,
            "route_equal": self.route_equal,
        });
        if let Some(c) = self.cofactor_equal {
            v["cofactor_equal"] = c.into();
        }
        if self.outside_regime {
            v["outside_regime"] = true.into();
        }
        if let Some(e) = &self.error {
            v["error"] = e.clone().into();
        }
        v
    }

    pub fn summary(&self) -> String {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{tag} theorem{} n={} r={} offset={} equal={} route={}",
            self.theorem.label().replace('.', ""),
            self.n,
            self.r,
            self.offset,
            self.equal,
            self.route_equal
        );
        if let Some(c) = self.cofactor_equal {
            s.push_str(&format!(" cofactor={c}"));
        }
        if self.outside_regime {
            s.push_str(" (r < 0: outside verified regime)");
        }
        if let Some(e) = &self.error {
            s.push_str(&format!(" error: {e}"));
        }
        s.push_str(&format!(" [{} ms]", self.elapsed_ms));
        s
    }
}

pub fn verify_case(theorem: Theorem, n: u32, r: i64, offset: u32) -> TheoremReport {
    let start = Instant::now();
    let h = build_hankel(theorem.family(), n, offset, r);
    let mut report = TheoremReport {
        theorem,
        n,
        r,
        offset,
        oracle_det: MPoly::zero(),
        closed_form: MPoly::zero(),
        equal: false,
        cofactor_equal: None,
        route_equal: false,
        outside_regime: r < 0,
        elapsed_ms: 0,
        error: None,
    };
    let oracle = match det_bareiss(&h.matrix) {
        Ok(d) => d,
        Err(e) => {
            report.error = Some(e.to_string());
            report.elapsed_ms = start.elapsed().as_millis();
            return report;
        }
    };
    let closed = match theorem.closed_form(n, offset, r) {
        Ok(c) => c,
        Err(e) => {
            report.error = Some(e.to_string());
            report.elapsed_ms = start.elapsed().as_millis();
            return report;
        }
    };
    if n <= CROSS_CHECK_MAX_DIM {
        report.cofactor_equal = Some(det_cofactor(&h.matrix).map(|c| c == oracle).unwrap_or(false));
    }
    report.route_equal = if offset == 0 {
        theorem.norm_product(n, r) == closed
    } else {
        theorem.signed_constant_term(n, r) == theorem.offset_sum(n, r)
    };
    report.equal = oracle == closed;
    report.oracle_det = oracle;
    report.closed_form = closed;
    report.elapsed_ms = start.elapsed().as_millis();
    report
}

/// All cases `1 <= n <= n_max`, `r` in `r_set`, offset in `{0, 1}`, in
/// that nesting order. Cases run in parallel on the current rayon pool.
pub fn verify_theorem(theorem: Theorem, n_max: u32, r_set: &[i64]) -> Vec<TheoremReport> {
    let cases: Vec<(u32, i64, u32)> = (1..=n_max)
        .flat_map(|n| r_set.iter().flat_map(move |&r| [0, 1].map(|o| (n, r, o))))
        .collect();
    cases
        .into_par_iter()
        .map(|(n, r, o)| verify_case(theorem, n, r, o))
        .collect()
}

/// A random polynomial with `x`- and `a`-degree at most `max_deg`, q
/// exponents in `[-q_span, q_span]` and small integer coefficients.
pub fn random_mpoly<R: Rng>(rng: &mut R, max_deg: u32, q_span: i32) -> MPoly {
    let terms = rng.gen_range(0..=4);
    (0..terms)
        .map(|_| {
            let c = rng.gen_range(-3i64..=3);
            let e = rng.gen_range(-q_span..=q_span);
            let ex = rng.gen_range(0..=max_deg);
            let ea = rng.gen_range(0..=max_deg);
            MPoly::monomial(QLaurent::from_int(c).shift(e), ex, ea)
        })
        .sum()
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, max_deg: u32, q_span: i32) -> SquareMatrix {
    let rows = (0..n)
        .map(|_| (0..n).map(|_| random_mpoly(rng, max_deg, q_span)).collect())
        .collect();
    SquareMatrix::from_rows(rows).expect("square by construction")
}

/// Bareiss against cofactor expansion on `count` seeded random matrices of
/// dimension 1 to 4.
pub fn check_random_determinants(seed: u64, count: usize) -> CheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let case = format!("random seed={seed} count={count}");
    for i in 0..count {
        let n = rng.gen_range(1..=4);
        let m = random_matrix(&mut rng, n, 2, 2);
        let b = det_bareiss(&m);
        let c = det_cofactor(&m);
        match (b, c) {
            (Ok(b), Ok(c)) if b == c => {}
            (b, c) => {
                return CheckReport::new("determinants", case, false)
                    .with_detail(format!("matrix {i}: bareiss {b:?}, cofactor {c:?}"));
            }
        }
    }
    CheckReport::new("determinants", case, true)
}
