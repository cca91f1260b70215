use rayon::prelude::*;

use crate::arith::{gamma_at, int, ln_enclosure, ratio, CertifiedReal};
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_cache, HarmonicIndex, HarmonicState};

const GUARD_BITS: u32 = 16;
/// Consecutive indices handled by one worker in [`scan_states`].
const SCAN_CHUNK: u64 = 256;

/// Enclosure of `ε_n = H_n − ½ ln(2m) − γ`.
#[derive(Clone, Debug)]
pub struct EpsilonValue {
    pub n: HarmonicIndex,
    pub enclosure: CertifiedReal,
}

/// `ε_n` from an already computed exact `H_n`. The radius is at most
/// `2^(8−prec)` while `prec` stays within the range of the embedded γ.
pub fn epsilon_from_state(n: HarmonicIndex, state: &HarmonicState, prec: u32) -> CertifiedReal {
    assert_eq!(state.n(), n.get(), "harmonic state for a different n");
    let wp = prec + GUARD_BITS;
    let two_m = n.m().as_rational() * int(2);
    let half_ln = ln_enclosure(&two_m, wp).expect("2m is positive").mul_pow2(-1);
    let e = &(&state.enclosure(wp) - &half_ln) - &gamma_at(wp);
    e.with_precision(prec)
}

pub fn epsilon(n: HarmonicIndex, prec: u32) -> EpsilonValue {
    let state = harmonic_cache().state(n.get());
    EpsilonValue { n, enclosure: epsilon_from_state(n, &state, prec) }
}

/// `ε_{n−1} − ε_n = ∫₀¹ t²/(n(n²−t²)) dt = ½ ln((n+1)/(n−1)) − 1/n`.
pub fn epsilon_step(n: u64, prec: u32) -> Result<CertifiedReal> {
    if n < 2 {
        return Err(Error::Usage(format!("epsilon_step needs n ≥ 2, got {n}")));
    }
    let wp = prec + GUARD_BITS;
    let l = ln_enclosure(&ratio(n + 1, n - 1), wp)?.mul_pow2(-1);
    Ok(l.sub_rational(&ratio(1, n)).with_precision(prec))
}

/// Evaluates `f(n, H_n)` for every `n` in `lo..=hi`, in parallel over
/// contiguous chunks. Output is ordered by `n`.
pub fn scan_states<T, F>(lo: HarmonicIndex, hi: HarmonicIndex, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(HarmonicIndex, &HarmonicState) -> T + Sync,
{
    let (lo, hi) = (lo.get(), hi.get());
    if lo > hi {
        return Vec::new();
    }
    let starts: Vec<u64> = (lo..=hi).step_by(SCAN_CHUNK as usize).collect();
    let chunks: Vec<Vec<T>> = starts
        .into_par_iter()
        .map(|start| {
            let end = (start + SCAN_CHUNK - 1).min(hi);
            let mut state = harmonic_cache().state(start);
            let mut out = Vec::with_capacity((end - start + 1) as usize);
            for n in start..=end {
                state.advance_to(n);
                out.push(f(HarmonicIndex::new(n).expect("index in range"), &state));
            }
            out
        })
        .collect();
    chunks.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u64) -> HarmonicIndex {
        HarmonicIndex::new(n).unwrap()
    }

    #[test]
    fn oracle_values() {
        // 1 − ½ln2 − γ and 25/12 − ½ln20 − γ from a 60-digit evaluation
        let e1 = epsilon(idx(1), 128).enclosure;
        assert!((e1.mid_f64() - 0.076_210_744_818_494_48).abs() < 1e-16);
        let e4 = epsilon(idx(4), 128).enclosure;
        assert!((e4.mid_f64() - 0.008_251_531_654_804_976).abs() < 1e-17);
    }

    #[test]
    fn radius_contract() {
        for n in [1u64, 10, 1000] {
            for prec in [64u32, 128, 256] {
                let e = epsilon(idx(n), prec).enclosure;
                assert!(e.radius() <= &crate::arith::Dyadic::pow2(8 - prec as i64));
            }
        }
    }

    #[test]
    fn strictly_decreasing_start() {
        let e: Vec<_> = (1..=3).map(|n| epsilon(idx(n), 128).enclosure).collect();
        assert!((&e[0] - &e[1]).is_positive());
        assert!((&e[1] - &e[2]).is_positive());
    }

    #[test]
    fn step_closed_form() {
        let s2 = epsilon_step(2, 128).unwrap();
        assert!((s2.mid_f64() - 0.049_306_144_334_054_8).abs() < 1e-15);
        let s3 = epsilon_step(3, 128).unwrap();
        assert!((s3.mid_f64() - 0.013_240_256_946_639_3).abs() < 1e-15);
        let d = &epsilon(idx(1), 128).enclosure - &epsilon(idx(2), 128).enclosure;
        assert!(d.overlaps(&s2));
        assert!(epsilon_step(1, 64).is_err());
    }

    #[test]
    fn scan_matches_pointwise() {
        let v = scan_states(idx(250), idx(530), |n, s| (n.get(), s.to_rational()));
        assert_eq!(v.len(), 281);
        assert_eq!(v[0].0, 250);
        assert_eq!(v[280].1, crate::harmonic::harmonic_exact(idx(530)));
    }
}
