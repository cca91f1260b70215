use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::index::HarmonicIndex;
use crate::arith::{CertifiedReal, Rational};

/// `H_n` held as `numer / lcm(1..n)`.
///
/// Advancing costs only big-by-small multiplications and one exact division,
/// so no gcd is taken until a canonical [`Rational`] is requested.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicState {
    n: u64,
    numer: BigUint,
    lcm: BigUint,
}

impl HarmonicState {
    /// `H_0 = 0/1`.
    pub fn start() -> Self {
        HarmonicState { n: 0, numer: BigUint::zero(), lcm: BigUint::from(1u32) }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn advance(&mut self) {
        let k = self.n + 1;
        let r = (&self.lcm % k).to_u64().expect("remainder below k");
        let g = r.gcd(&k);
        let factor = k / g;
        if factor != 1 {
            self.lcm *= factor;
            self.numer *= factor;
        }
        self.numer += &self.lcm / k;
        self.n = k;
    }

    pub fn advance_to(&mut self, n: u64) {
        assert!(n >= self.n, "cannot rewind a harmonic state");
        while self.n < n {
            self.advance();
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.numer.clone()), BigInt::from(self.lcm.clone()))
    }

    /// Single outward rounding of the exact value.
    pub fn enclosure(&self, prec: u32) -> CertifiedReal {
        CertifiedReal::from_ratio(
            &BigInt::from(self.numer.clone()),
            &BigInt::from(self.lcm.clone()),
            prec,
        )
        .expect("lcm is positive")
    }

    /// Numerator and denominator (not reduced).
    pub fn parts(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.numer.clone()), BigInt::from(self.lcm.clone()))
    }
}

/// Checkpointed exact harmonic numbers.
///
/// States at multiples of `stride` are kept up to `ceiling`; a lookup walks
/// forward from the nearest checkpoint. Checkpoints are only ever appended
/// in order under the write lock, so every reader sees a complete prefix and
/// results never depend on interleaving.
#[derive(Debug)]
pub struct HarmonicCache {
    stride: u64,
    ceiling: u64,
    checkpoints: RwLock<Vec<HarmonicState>>,
}

impl Default for HarmonicCache {
    fn default() -> Self {
        Self::new(100_000, 256)
    }
}

impl HarmonicCache {
    pub fn new(ceiling: u64, stride: u64) -> Self {
        assert!(stride > 0);
        HarmonicCache { stride, ceiling, checkpoints: RwLock::new(vec![HarmonicState::start()]) }
    }

    pub fn ceiling(&self) -> u64 {
        self.ceiling
    }

    /// Exact state at `n` (any `n ≥ 0`).
    pub fn state(&self, n: u64) -> HarmonicState {
        let target = (n.min(self.ceiling) / self.stride) as usize;
        let mut base = {
            let cps = self.checkpoints.read().expect("harmonic cache poisoned");
            cps[target.min(cps.len() - 1)].clone()
        };
        if (base.n / self.stride) < target as u64 {
            let mut cps = self.checkpoints.write().expect("harmonic cache poisoned");
            let mut s = cps.last().expect("nonempty").clone();
            while cps.len() <= target {
                s.advance_to(cps.len() as u64 * self.stride);
                cps.push(s.clone());
            }
            base = cps[target].clone();
        }
        base.advance_to(n);
        base
    }

    pub fn get(&self, n: HarmonicIndex) -> Rational {
        self.state(n.get()).to_rational()
    }
}

pub fn harmonic_cache() -> &'static HarmonicCache {
    static CACHE: OnceLock<HarmonicCache> = OnceLock::new();
    CACHE.get_or_init(HarmonicCache::default)
}

/// Exact `H_n = Σ_{k=1..n} 1/k` in lowest terms.
pub fn harmonic_exact(n: HarmonicIndex) -> Rational {
    harmonic_cache().get(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn direct(n: u64) -> Rational {
        (1..=n).map(|k| ratio(1, k as i64)).fold(ratio(0, 1), |a, b| a + b)
    }

    fn idx(n: u64) -> HarmonicIndex {
        HarmonicIndex::new(n).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(harmonic_exact(idx(1)), ratio(1, 1));
        assert_eq!(harmonic_exact(idx(4)), ratio(25, 12));
        assert_eq!(harmonic_exact(idx(10)), ratio(7381, 2520));
        assert_eq!(harmonic_exact(idx(10)), direct(10));
    }

    #[test]
    fn cache_agrees_with_direct_summation() {
        let cache = HarmonicCache::new(300, 16);
        for n in [1u64, 15, 16, 17, 100, 299, 300, 301, 333] {
            assert_eq!(cache.get(idx(n)), direct(n), "n = {n}");
        }
        // out of order access gives the same answers
        assert_eq!(cache.get(idx(40)), direct(40));
    }

    #[test]
    fn consecutive_differences() {
        let mut prev = harmonic_exact(idx(1));
        for n in 2..=200u64 {
            let h = harmonic_exact(idx(n));
            assert_eq!(&h - &prev, ratio(1, n as i64));
            prev = h;
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let cache = HarmonicCache::new(2000, 32);
        let results: Vec<Vec<Rational>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..4)
                .map(|t| {
                    let cache = &cache;
                    s.spawn(move || {
                        (0..20).map(|i| cache.get(idx(1 + (i * 97 + t * 31) % 1900))).collect()
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        for (t, r) in results.iter().enumerate() {
            for (i, v) in r.iter().enumerate() {
                assert_eq!(v, &direct(1 + ((i * 97 + t * 31) % 1900) as u64));
            }
        }
    }
}
