use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, ratio, CertifiedReal, Rational};
use crate::harmonic::bernoulli::bernoulli_number;

/// `log2` of a positive rational, good to a few units in the last place.
fn log2_approx(q: &Rational) -> f64 {
    let n = q.numer().abs();
    let d = q.denom();
    let shift = |x: &BigInt| -> f64 {
        let b = x.bits();
        let top = if b > 60 { x >> (b - 60) } else { x.clone() };
        let t: f64 = num_traits::ToPrimitive::to_f64(&top).unwrap_or(1.0);
        t.log2() + b.saturating_sub(60) as f64
    };
    shift(&n) - shift(d)
}

/// Certified `Σ_{k≥q} k^(−s)` for integers `s ≥ 2`, `q ≥ 1`.
///
/// The radius targets `q^(−s) · 2^(−wp)`. Leading terms are summed directly;
/// the rest either drops below target (bounded by `k^(−s) + k^(1−s)/(s−1)`)
/// or is handled by Euler–Maclaurin from `Q ≥ wp/2`:
///
/// ```text
/// Σ_{k≥Q} k^-s = Q^(1−s)/(s−1) + Q^-s/2 + Σ_{j=1..J} B_2j/(2j)! · (s)_{2j−1} · Q^(−s−2j+1) + R,
/// |R| ≤ |B_2J|/(2J)! · (s)_{2J−1} · Q^(−s−2J+1)
/// ```
///
/// The remainder bound is the magnitude of the last included term, which
/// holds because every derivative of `x^-s` keeps one sign on `[Q, ∞)`.
pub fn hurwitz_tail(s: u32, q: u64, wp: u32) -> CertifiedReal {
    assert!(s >= 2 && q >= 1, "hurwitz_tail needs s ≥ 2 and q ≥ 1");
    let target_log2 = -(s as f64) * (q as f64).log2() - wp as f64;
    let switch = q.max(wp as u64 / 2 + 10);
    let mut sum = CertifiedReal::zero(wp);
    let mut k = q;
    while k < switch {
        let kq = int(k);
        let rest_log2 = -(s as f64) * (k as f64).log2() + (1.0 + k as f64 / (s - 1) as f64).log2();
        if rest_log2 < target_log2 - 2.0 {
            let bound = kq.clone().pow(-(s as i32)) + kq.pow(1 - s as i32) / int(s - 1);
            return sum.add_error_rational(&bound);
        }
        let ks = BigInt::from(k).pow(s);
        sum = &sum + &CertifiedReal::from_ratio(&BigInt::one(), &ks, wp).expect("k ≥ 1");
        k += 1;
    }

    let big_q = int(switch);
    let mut em = big_q.clone().pow(1 - s as i32) / int(s - 1) + big_q.clone().pow(-(s as i32)) / int(2);
    let mut poch = Rational::from_integer(BigInt::from(s)); // (s)_{2j−1} at j = 1
    let mut fact = Rational::from_integer(BigInt::from(2)); // (2j)! at j = 1
    let mut qpow = big_q.clone().pow(-(s as i32) - 1); // Q^(−s−2j+1) at j = 1
    let q2inv = big_q.pow(-2);
    let mut last = Rational::zero();
    let mut j: u64 = 1;
    loop {
        let t = bernoulli_number(2 * j as usize) * &poch / &fact * &qpow;
        if j > 1 && t.abs() >= last.abs() {
            break;
        }
        em += &t;
        last = t;
        if log2_approx(&last.abs()) < target_log2 - 2.0 {
            break;
        }
        let a = s as u64 + 2 * j - 1;
        poch *= ratio(a * (a + 1), 1);
        fact *= ratio((2 * j + 1) * (2 * j + 2), 1);
        qpow *= &q2inv;
        j += 1;
    }
    (&sum + &CertifiedReal::from_rational(&em, wp)).add_error_rational(&last)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = hurwitz_tail(2, 1, 200);
        assert!((z.mid_f64() - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-15);
        assert!(z.rad_f64() < 1e-55);
    }

    #[test]
    fn shifted_tail_matches_direct_difference() {
        let full = hurwitz_tail(3, 1, 160);
        let tail = hurwitz_tail(3, 5, 160);
        let head = ratio(1, 1) + ratio(1, 8) + ratio(1, 27) + ratio(1, 64);
        assert!(full.sub_rational(&head).overlaps(&tail));
    }

    #[test]
    fn large_exponent_exits_early() {
        // 2^-201 < ζ(201, 2) < 2^-201 + 2·3^-201 < 2^-201 + 2^-317
        let z = hurwitz_tail(201, 2, 300);
        let first = CertifiedReal::from_ratio(&BigInt::one(), &BigInt::from(2).pow(201u32), 300).unwrap();
        let d = &z - &first;
        assert!(d.is_positive());
        assert!(d.upper() < crate::arith::Dyadic::pow2(-317));
    }
}
