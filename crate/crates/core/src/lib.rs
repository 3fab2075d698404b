//! Exact computer algebra for generalized q-Stirling numbers, the
//! q-exponential polynomials built from them, their orthogonal polynomial
//! companions, and the Hankel determinants of their moment sequences.
//!
//! All arithmetic is exact: coefficients are Laurent polynomials in `q`
//! over the rationals, and polynomials live in `Q[q, q^-1][x, a]`.

pub mod error;
pub mod exactalg;
pub mod hankel;
pub mod orthopoly;
pub mod qcore;
pub mod report;
pub mod rstirling;
pub mod verify;

pub use error::{Error, Result};
pub use exactalg::{BigInt, BigRational, MPoly, Monomial, QLaurent, QRational, TruncSeries};
pub use hankel::{
    build_hankel, closed_form_theorem21, closed_form_theorem31, det_bareiss, det_cofactor, verify_case, verify_theorem,
    HankelMatrix, MomentFamily, SquareMatrix, Theorem, TheoremReport,
};
pub use orthopoly::{big_h_poly, g_poly, h_poly, MomentFunctional, OrthKind};
pub use report::CheckReport;
pub use rstirling::{bigphi, phi, stirling, StirlingTable};
pub use verify::{run_suite, Report, Suite, VerifyConfig};
