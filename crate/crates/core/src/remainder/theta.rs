use std::collections::HashMap;

use super::epsilon::{epsilon_from_state, scan_states};
use crate::arith::{certify_open_interval, int, ratio, CertifiedReal, PrecisionPolicy, Rational};
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_cache, HarmonicIndex, HarmonicState, RamanujanCoefficients};
use crate::report::Verdict;

/// Evidence for `0 < Θ_n < 1`.
#[derive(Clone, Debug)]
pub struct ThetaCertificate {
    pub n: HarmonicIndex,
    pub theta: CertifiedReal,
    pub verdict: Verdict,
    /// Precision of the deciding evaluation.
    pub bits: u32,
}

/// `Θ_n = 2310 m⁵ (ε_n − 1/12m + 1/120m² − 1/630m³ + 1/1680m⁴)`.
pub fn theta_from_state(n: HarmonicIndex, state: &HarmonicState, prec: u32) -> CertifiedReal {
    theta_from_epsilon(n, &epsilon_from_state(n, state, prec))
}

fn theta_from_epsilon(n: HarmonicIndex, eps: &CertifiedReal) -> CertifiedReal {
    let m = n.m().as_rational();
    let four = RamanujanCoefficients::new().partial_sum(&m, 4);
    eps.sub_rational(&four).mul_rational(&(int(2310) * n.m().pow(5)))
}

fn certify_theta(n: HarmonicIndex, state: &HarmonicState, policy: &PrecisionPolicy) -> ThetaCertificate {
    let cert = certify_open_interval(
        |bits| theta_from_state(n, state, bits),
        &ratio(0, 1),
        &ratio(1, 1),
        policy,
    );
    ThetaCertificate { n, theta: cert.enclosure, verdict: cert.holds.into(), bits: cert.bits }
}

pub fn theta(n: HarmonicIndex, policy: &PrecisionPolicy) -> ThetaCertificate {
    certify_theta(n, &harmonic_cache().state(n.get()), policy)
}

/// Certificates for every `n` in `lo..=hi`, ordered by `n`.
pub fn theta_scan(lo: HarmonicIndex, hi: HarmonicIndex, policy: &PrecisionPolicy) -> Vec<ThetaCertificate> {
    scan_states(lo, hi, |n, state| certify_theta(n, state, policy))
}

/// Whether truncating the expansion after `t` terms leaves an error smaller
/// than, and of the same sign as, the next term.
#[derive(Clone, Debug)]
pub struct TruncationCheck {
    pub n: HarmonicIndex,
    pub t: usize,
    /// `ε_n − Σ_{j≤t} c_j m^-j`.
    pub residual: CertifiedReal,
    /// `c_{t+1} m^-(t+1)`.
    pub next_term: Rational,
    pub verdict: Verdict,
    pub bits: u32,
}

/// Certifies `0 < residual / next_term < 1` for each `t` in `ts`, sharing the
/// `ε_n` evaluations between them.
fn truncation_checks(
    n: HarmonicIndex,
    state: &HarmonicState,
    ts: &[usize],
    policy: &PrecisionPolicy,
) -> Vec<TruncationCheck> {
    let coeffs = RamanujanCoefficients::new();
    let m = n.m().as_rational();
    let mut memo: HashMap<u32, CertifiedReal> = HashMap::new();
    ts.iter()
        .map(|&t| {
            let partial = coeffs.partial_sum(&m, t);
            let next_term = coeffs.term(&m, t + 1);
            let scale = next_term.recip();
            let cert = certify_open_interval(
                |bits| {
                    let eps = memo.entry(bits).or_insert_with(|| epsilon_from_state(n, state, bits));
                    eps.sub_rational(&partial).mul_rational(&scale)
                },
                &ratio(0, 1),
                &ratio(1, 1),
                policy,
            );
            let residual = cert.enclosure.mul_rational(&next_term);
            TruncationCheck { n, t, residual, next_term, verdict: cert.holds.into(), bits: cert.bits }
        })
        .collect()
}

pub fn alternating_truncation_check(n: HarmonicIndex, t: usize, policy: &PrecisionPolicy) -> Result<TruncationCheck> {
    if t > 4 {
        return Err(Error::Usage(format!("truncation order must be in 0..=4, got {t}")));
    }
    let state = harmonic_cache().state(n.get());
    Ok(truncation_checks(n, &state, &[t], policy).remove(0))
}

/// All truncation orders `0..=4` for every `n` in `lo..=hi`, ordered by
/// `(n, t)`.
pub fn alternating_truncation_scan(
    lo: HarmonicIndex,
    hi: HarmonicIndex,
    policy: &PrecisionPolicy,
) -> Vec<TruncationCheck> {
    scan_states(lo, hi, |n, state| truncation_checks(n, state, &[0, 1, 2, 3, 4], policy))
        .into_iter()
        .flatten()
        .collect()
}
