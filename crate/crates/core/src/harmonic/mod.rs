//! Exact harmonic numbers, the triangular index `m`, Bernoulli numbers and
//! the two truncated expansions of `H_n`.

pub mod bernoulli;
mod exact;
mod expansion;
mod index;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use exact::{harmonic_cache, harmonic_exact, HarmonicCache, HarmonicState};
pub use expansion::{euler_approx, ramanujan_approx, EulerApprox, RamanujanCoefficients};
pub use index::{m_of, HarmonicIndex, TriangularM};
