//! Certified numerics for Ramanujan's expansion of the harmonic numbers
//!
//! ```text
//! H_n = ½ ln(2m) + γ + 1/12m − 1/120m² + 1/630m³ − 1/1680m⁴ + Θ_n/2310m⁵,   m = n(n+1)/2
//! ```
//!
//! Every transcendental quantity is carried as a [`CertifiedReal`] (a ball
//! `midpoint ± radius` with outward error propagation) and every exact
//! coefficient or identity as a [`Rational`]. On top of that the crate
//! certifies `0 < Θ_n < 1`, the alternating-truncation property of the
//! expansion, the exact partial-fraction and Kummer identities behind it,
//! and Lodge's corrected approximations together with their best-possible
//! constants.

pub mod arith;
pub mod error;
pub mod harmonic;
pub mod lodge;
pub mod parse;
pub mod remainder;
pub mod report;
pub mod series;

pub use arith::{
    gamma_constant, ln_enclosure, rational_arith, resolve_strict_sign, CertifiedReal, Dyadic,
    PrecisionPolicy, Rational, RationalOp, RationalResult, StrictSign,
};
pub use error::{Error, Result};
pub use harmonic::{HarmonicIndex, TriangularM};
pub use report::{CertificationReport, ReportRow, Verdict};
