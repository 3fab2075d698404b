//! Exact arithmetic kernel: Laurent polynomials in `q` over the rationals,
//! polynomials in `x` and `a` over that ring, rational functions in `q` and
//! truncated power series.

mod intpoly;
mod laurent;
mod mpoly;
pub mod parse;
mod qrational;
pub mod render;
mod series;

pub use laurent::QLaurent;
pub use mpoly::{MPoly, Monomial};
pub use qrational::QRational;
pub use series::TruncSeries;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
