use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::One;

use super::ball::CertifiedReal;
use super::dyadic::{Dyadic, Round};
use super::ln::ln_enclosure;
use super::Rational;
use crate::error::{Error, Result};
use crate::harmonic::bernoulli::bernoulli_number;

/// The first 200 decimals of Euler's constant, truncated.
const GAMMA_DECIMALS: [&str; 4] = [
    "57721566490153286060651209008240243104215933593992",
    "35988057672348848677267776646709369470632917467495",
    "14631447249807082480960504014486542836224173997644",
    "92353625350033374293733773767394279259525824709491",
];

const GAMMA_DIGITS: usize = 200;

/// Largest precision `gamma_constant` can honour: the embedded digits carry
/// an error of at most `10^-200 / 2 < 2^-664`.
pub const GAMMA_MAX_BITS: u32 = 660;

/// Cut-off `N` of the Euler–Maclaurin cross-check.
const EM_CUTOFF: u64 = 1_000_000;
/// Number of Bernoulli correction terms in the cross-check.
const EM_TERMS: u32 = 5;
/// Fixed-point width, in 64-bit limbs, used to sum `H_N`.
const EM_LIMBS: usize = 5;

/// `(midpoint, radius)` of the embedded constant as exact rationals.
fn embedded() -> &'static (Rational, Rational) {
    static EMBEDDED: OnceLock<(Rational, Rational)> = OnceLock::new();
    EMBEDDED.get_or_init(|| {
        let digits: String = GAMMA_DECIMALS.concat();
        debug_assert_eq!(digits.len(), GAMMA_DIGITS);
        let d: BigInt = digits.parse().expect("embedded digits");
        let scale = BigInt::from(10).pow(GAMMA_DIGITS as u32) * 2u32;
        // truncated digits: γ ∈ [d, d + 1]·10^-200
        let mid = Rational::new(d * 2u32 + 1u32, scale.clone());
        let rad = Rational::new(BigInt::one(), scale);
        (mid, rad)
    })
}

/// Enclosure of the Euler–Mascheroni constant with radius at most `2^(4−prec)`.
pub fn gamma_constant(prec: u32) -> Result<CertifiedReal> {
    if prec == 0 || prec > GAMMA_MAX_BITS {
        return Err(Error::PrecisionUnavailable { requested: prec, limit: GAMMA_MAX_BITS });
    }
    let (mid, rad) = embedded();
    Ok(CertifiedReal::from_rational(mid, prec).add_error_rational(rad))
}

/// γ at `prec` bits, capped at what the embedded constant supports.
pub(crate) fn gamma_at(prec: u32) -> CertifiedReal {
    gamma_constant(prec.min(GAMMA_MAX_BITS)).expect("precision within the embedded range")
}

/// `floor(2^(64·EM_LIMBS) · Σ_{k≤n} 1/k)` up to an error of `n` units, as
/// little-endian limbs with one extra limb for the integer part.
fn harmonic_fixed_point(n: u64) -> Vec<u64> {
    let mut acc = vec![0u64; EM_LIMBS + 1];
    let mut q = [0u64; EM_LIMBS + 1];
    for k in 1..=n {
        // long division of 2^(64·EM_LIMBS) by k
        let mut rem: u128 = 1;
        q[EM_LIMBS] = 0;
        if k == 1 {
            q.iter_mut().for_each(|l| *l = 0);
            q[EM_LIMBS] = 1;
        } else {
            for i in (0..EM_LIMBS).rev() {
                let cur = rem << 64;
                q[i] = (cur / k as u128) as u64;
                rem = cur % k as u128;
            }
        }
        let mut carry = 0u64;
        for (a, b) in acc.iter_mut().zip(q.iter()) {
            let (s1, c1) = a.overflowing_add(*b);
            let (s2, c2) = s1.overflowing_add(carry);
            *a = s2;
            carry = (c1 as u64) + (c2 as u64);
        }
    }
    acc
}

fn limbs_to_bigint(limbs: &[u64]) -> BigInt {
    let mut v = BigInt::from(0u32);
    for l in limbs.iter().rev() {
        v = (v << 64u32) + BigInt::from(*l);
    }
    v
}

/// Independent enclosure of γ from the Euler–Maclaurin expansion
///
/// ```text
/// γ = H_N − ln N − 1/(2N) + Σ_{j=1..5} B_2j / (2j N^2j) − R,   |R| ≤ |B_12| / (12 N^12)
/// ```
///
/// at `N = 10^6`, good to roughly 73 decimal digits.
pub fn gamma_euler_maclaurin() -> CertifiedReal {
    let wp = (64 * EM_LIMBS) as u32;
    let n = EM_CUTOFF;
    let acc = limbs_to_bigint(&harmonic_fixed_point(n));
    let h_lo = Dyadic::new(acc, -(wp as i64));
    let h = CertifiedReal::with_radius(
        h_lo.add(&Dyadic::new(BigInt::from(n), -(wp as i64) - 1)),
        Dyadic::new(BigInt::from(n), -(wp as i64) - 1),
        wp,
    );
    let nq = Rational::from_integer(n.into());
    let ln_n = ln_enclosure(&nq, wp).expect("ln of positive integer");
    let mut corr = -Rational::new(BigInt::one(), BigInt::from(2 * n));
    for j in 1..=EM_TERMS {
        let b = bernoulli_number(2 * j as usize);
        corr += b / (Rational::from_integer((2 * j).into()) * nq.pow(2 * j as i32));
    }
    let j = EM_TERMS + 1;
    let rem = bernoulli_number(2 * j as usize)
        / (Rational::from_integer((2 * j).into()) * nq.pow(2 * j as i32));
    (&h - &ln_n).add_rational(&corr).add_error_rational(&rem)
}

/// Outcome of comparing the embedded constant with the Euler–Maclaurin
/// computation.
#[derive(Clone, Debug)]
pub struct GammaCrossCheck {
    pub embedded: CertifiedReal,
    pub euler_maclaurin: CertifiedReal,
    /// Number of decimal digits on which both enclosures provably agree.
    pub agreeing_digits: u32,
}

/// Cross-checks the embedded γ against [`gamma_euler_maclaurin`]. Computed
/// once per process.
pub fn gamma_cross_check() -> Result<&'static GammaCrossCheck> {
    static CHECK: OnceLock<Result<GammaCrossCheck>> = OnceLock::new();
    CHECK
        .get_or_init(|| {
            let embedded = gamma_constant(GAMMA_MAX_BITS)?;
            let em = gamma_euler_maclaurin();
            if !embedded.overlaps(&em) {
                return Err(Error::CrossCheck(format!(
                    "embedded γ {embedded:?} and Euler–Maclaurin γ {em:?} are disjoint"
                )));
            }
            // both contain γ, so any two points differ by at most the hull width
            let hull = embedded.upper().max(em.upper()).sub(&embedded.lower().min(em.lower()));
            let (hull_up, _) = Dyadic::from_rational(&hull.to_rational(), 64, Round::Ceil);
            let digits = (-hull_up.to_f64().log10()).floor().max(0.0) as u32;
            Ok(GammaCrossCheck { embedded, euler_maclaurin: em, agreeing_digits: digits })
        })
        .as_ref()
        .map_err(Clone::clone)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    #[test]
    fn leading_digits() {
        let g = gamma_constant(20).unwrap();
        assert!(g.contains_rational(&ratio(577216, 1_000_000)) || (g.mid_f64() - 0.57721).abs() < 1e-5);
        assert!((g.mid_f64() - 0.577_215_664_901_532_9).abs() < 1e-5);
    }

    #[test]
    fn radius_contract_and_limits() {
        for prec in [1u32, 20, 64, 128, 256, GAMMA_MAX_BITS] {
            let g = gamma_constant(prec).unwrap();
            let bound = Dyadic::pow2(4 - prec as i64);
            assert!(g.radius() <= &bound, "prec {prec}");
        }
        assert!(matches!(gamma_constant(GAMMA_MAX_BITS + 1), Err(Error::PrecisionUnavailable { .. })));
        assert!(gamma_constant(0).is_err());
    }

    #[test]
    fn enclosures_nest() {
        let wide = gamma_constant(64).unwrap();
        let tight = gamma_constant(128).unwrap();
        assert!(wide.contains(&tight));
    }

    #[test]
    fn fifty_digits_at_170_bits() {
        let g = gamma_constant(170).unwrap();
        let want = Rational::new(
            "57721566490153286060651209008240243104215933593992".parse().unwrap(),
            BigInt::from(10).pow(50u32),
        );
        // the enclosure lies within [want, want + 10^-50]
        let hi = &want + Rational::new(BigInt::one(), BigInt::from(10).pow(50u32));
        assert!(g.lower().to_rational() >= want && g.upper().to_rational() < hi);
    }
}
