use num_bigint::BigInt;
use num_traits::One;

use super::zeta::hurwitz_tail;
use crate::arith::{int, ratio, CertifiedReal, Rational};
use crate::error::{Error, Result};
use crate::harmonic::HarmonicIndex;

/// Largest `p` reached by the integration-by-parts chain.
pub const MAX_INTEGRAL_POWER: u32 = 7;

const GUARD_BITS: u32 = 24;

fn check_power(p: u32) -> Result<()> {
    if (1..=MAX_INTEGRAL_POWER).contains(&p) {
        Ok(())
    } else {
        Err(Error::Usage(format!("integral power must be in 1..={MAX_INTEGRAL_POWER}, got {p}")))
    }
}

/// Coefficients of `∫₀¹ t^{2p}/(k(k²−t²)^p) dt = Σ_j c_j k^-(2p+2j+1)`:
/// `c_j = C(p+j−1, j) / (2p+2j+1)`.
///
/// From `j ≥ p−1` on, `c_{j+1}/c_j ≤ (p+j)/(j+1) ≤ 2`.
struct Coefficients {
    p: u64,
    j: u64,
    binom: Rational,
}

impl Coefficients {
    fn new(p: u32) -> Self {
        Coefficients { p: p as u64, j: 0, binom: Rational::one() }
    }

    /// `(j, s_j, c_j)` for the current `j`, then advances.
    fn next(&mut self) -> (u64, u32, Rational) {
        let (p, j) = (self.p, self.j);
        let s = 2 * p + 2 * j + 1;
        let c = &self.binom / int(s);
        self.binom *= ratio(p + j, j + 1);
        self.j += 1;
        (j, s as u32, c)
    }
}

fn log2_of(q: &Rational) -> f64 {
    let bits = |x: &BigInt| x.bits() as f64;
    bits(q.numer()) - bits(q.denom())
}

/// `∫₀¹ t^{2p} / (k (k²−t²)^p) dt` for `k ≥ 2`.
///
/// Expands `(k²−t²)^-p` in `t²/k²`. Once the ratio of consecutive terms is at
/// most `2/k² ≤ 1/2`, the omitted part is below twice the first omitted term.
pub fn integral_term(k: u64, p: u32, prec: u32) -> Result<CertifiedReal> {
    check_power(p)?;
    if k < 2 {
        return Err(Error::Usage(format!("integral term needs k ≥ 2, got {k}")));
    }
    let wp = prec + GUARD_BITS;
    let kq = int(k);
    let mut coeffs = Coefficients::new(p);
    let mut sum = CertifiedReal::zero(wp);
    let mut lead = None;
    loop {
        let (j, s, c) = coeffs.next();
        let t = c * kq.clone().pow(-(s as i32));
        let lt = log2_of(&t);
        let l0 = *lead.get_or_insert(lt);
        if j + 1 >= p as u64 && lt < l0 - wp as f64 - 2.0 {
            return Ok(sum.add_error_rational(&(t * int(2))).with_precision(prec));
        }
        sum = &sum + &CertifiedReal::from_rational(&t, wp);
    }
}

/// Certified `Σ_{k>n} ∫₀¹ t^{2p} / (k (k²−t²)^p) dt`.
///
/// Summing the expansion of [`integral_term`] over `k` gives
/// `Σ_j c_j ζ(2p+2j+1, n+1)`, a series in Hurwitz tails that converges at
/// least like `(2/(n+1)²)^j`. With `N = n+1` and `s = 2p+2j+1`, each tail is
/// below `b_j = c_j N^-s (1 + N/(s−1))`, and the `b_j` shrink by a factor of
/// at least 2 from `j ≥ p−1` on, so the omitted part is below `2 b_J`.
pub fn tail_integral_sum(n: HarmonicIndex, p: u32, prec: u32) -> Result<CertifiedReal> {
    check_power(p)?;
    let wp = prec + GUARD_BITS;
    let big_n = n.get() + 1;
    let nq = int(big_n);
    let mut coeffs = Coefficients::new(p);
    let mut sum = CertifiedReal::zero(wp);
    let mut lead = None;
    loop {
        let (j, s, c) = coeffs.next();
        let b = &c * nq.clone().pow(-(s as i32)) * (int(1) + ratio(big_n, s as u64 - 1));
        let lb = log2_of(&b);
        let l0 = *lead.get_or_insert(lb);
        if j + 1 >= p as u64 && lb < l0 - wp as f64 - 4.0 {
            return Ok(sum.add_error_rational(&(b * int(2))).with_precision(prec));
        }
        sum = &sum + &hurwitz_tail(s, big_n, wp).mul_rational(&c);
    }
}
