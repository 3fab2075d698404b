//! Named verification suites over a `(n, r)` grid.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hankel::{check_random_determinants, verify_theorem, Theorem, TheoremReport};
use crate::orthopoly::{
    check_basis_images, check_moments, check_orthogonality, check_recurrence_big_h, check_recurrence_g,
    check_recurrence_h, OrthKind,
};
use crate::report::CheckReport;
use crate::rstirling::{
    check_bigphi_recurrences, check_dobinski, check_falling_expansion, check_generating_function,
    check_remark_identities,
};

/// Random matrices compared between the two determinant routes.
pub const RANDOM_MATRIX_COUNT: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub n_max: u32,
    pub r_set: Vec<i64>,
    pub order: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max: 6,
            r_set: vec![0, 1, 2, 3],
            order: 12,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theorem21,
    Theorem31,
    Gf,
    Dobinski,
    Remark,
    Recurrences,
    Orthogonality,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `All` runs them.
    pub const CONCRETE: [Suite; 7] = [
        Suite::Theorem21,
        Suite::Theorem31,
        Suite::Gf,
        Suite::Dobinski,
        Suite::Remark,
        Suite::Recurrences,
        Suite::Orthogonality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem21 => "theorem21",
            Suite::Theorem31 => "theorem31",
            Suite::Gf => "gf",
            Suite::Dobinski => "dobinski",
            Suite::Remark => "remark",
            Suite::Recurrences => "recurrences",
            Suite::Orthogonality => "orthogonality",
            Suite::All => "all",
        }
    }

    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::CONCRETE.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::CONCRETE
            .iter()
            .chain([Suite::All].iter())
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone)]
pub enum Report {
    Theorem(TheoremReport),
    Check(CheckReport),
}

impl Report {
    pub fn passed(&self) -> bool {
        match self {
            Report::Theorem(t) => t.passed(),
            Report::Check(c) => c.passed,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Report::Theorem(t) => t.to_json(),
            Report::Check(c) => serde_json::to_value(c).expect("plain struct"),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Report::Theorem(t) => f.write_str(&t.summary()),
            Report::Check(c) => c.fmt(f),
        }
    }
}

fn grid(lo: u32, hi: u32, r_set: &[i64]) -> Vec<(u32, i64)> {
    (lo..=hi).flat_map(|n| r_set.iter().map(move |&r| (n, r))).collect()
}

fn checks(cases: Vec<(u32, i64)>, f: impl Fn(u32, i64) -> Vec<CheckReport> + Sync) -> Vec<Report> {
    cases
        .into_par_iter()
        .flat_map_iter(|(n, r)| f(n, r))
        .map(Report::Check)
        .collect()
}

/// Runs one suite (or all of them) on the current rayon pool. Reports are
/// returned in a deterministic order.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<Report> {
    let n = cfg.n_max;
    let rs = &cfg.r_set;
    let order = cfg.order;
    match suite {
        Suite::All => Suite::CONCRETE.iter().flat_map(|&s| run_suite(s, cfg)).collect(),
        Suite::Theorem21 | Suite::Theorem31 => {
            let theorem = if suite == Suite::Theorem21 {
                Theorem::T21
            } else {
                Theorem::T31
            };
            let mut out: Vec<Report> = verify_theorem(theorem, n, rs)
                .into_iter()
                .map(Report::Theorem)
                .collect();
            if suite == Suite::Theorem21 {
                out.push(Report::Check(check_random_determinants(cfg.seed, RANDOM_MATRIX_COUNT)));
            }
            out
        }
        Suite::Gf => {
            let k_max = n.min(order.saturating_sub(1) as u32);
            let mut out = checks(grid(0, n, rs), |n, r| vec![check_falling_expansion(n, r)]);
            out.extend(checks(grid(0, k_max, rs), |k, r| {
                vec![check_generating_function(k, r, order)]
            }));
            out
        }
        Suite::Dobinski => checks(grid(0, n, rs), |n, r| vec![check_dobinski(n, r, order)]),
        Suite::Remark => checks(grid(0, n, rs), check_remark_identities),
        Suite::Recurrences => {
            let mut out = checks(grid(0, n, rs), |n, r| {
                vec![check_bigphi_recurrences(n, r), check_basis_images(n, r)]
            });
            out.extend(checks(grid(1, n, rs), |n, r| {
                vec![
                    check_recurrence_h(n, r),
                    check_recurrence_g(n, r),
                    check_recurrence_big_h(n, r),
                ]
            }));
            out
        }
        Suite::Orthogonality => checks(grid(0, n, rs), |n, r| {
            [OrthKind::H, OrthKind::G, OrthKind::BigH]
                .into_iter()
                .flat_map(|kind| {
                    (0..=n)
                        .map(move |k| check_orthogonality(kind, n, k, r))
                        .chain(std::iter::once(check_moments(kind, n, r)))
                })
                .collect()
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::CONCRETE.iter().chain([Suite::All].iter()) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), *s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn degenerate_grid_passes() {
        let cfg = VerifyConfig {
            n_max: 1,
            r_set: vec![0],
            ..Default::default()
        };
        let reps = run_suite(Suite::All, &cfg);
        assert!(!reps.is_empty());
        for r in &reps {
            assert!(r.passed(), "{r}");
        }
    }
}
