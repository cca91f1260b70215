use num_traits::{Signed, Zero};

use super::bernoulli::{bernoulli, MAX_PUBLIC_INDEX};
use super::index::HarmonicIndex;
use crate::arith::{gamma_at, int, ln_enclosure, ratio, CertifiedReal, Rational};
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 16;

/// The five coefficients of `m^-1 … m^-5` in Ramanujan's expansion:
/// `1/12, −1/120, 1/630, −1/1680, 1/2310`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamanujanCoefficients {
    coeffs: [Rational; 5],
}

impl Default for RamanujanCoefficients {
    fn default() -> Self {
        Self::new()
    }
}

impl RamanujanCoefficients {
    pub fn new() -> Self {
        let coeffs = [ratio(1, 12), ratio(-1, 120), ratio(1, 630), ratio(-1, 1680), ratio(1, 2310)];
        for (j, c) in coeffs.iter().enumerate() {
            assert_eq!(c.is_positive(), j % 2 == 0, "signs must alternate starting positive");
            assert!(c.abs().numer() == &1.into(), "unit fractions");
        }
        assert!(coeffs.windows(2).all(|w| w[0].denom() < w[1].denom()));
        RamanujanCoefficients { coeffs }
    }

    /// Coefficient of `m^-j`, `j` in `1..=5`.
    pub fn get(&self, j: usize) -> &Rational {
        &self.coeffs[j - 1]
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `Σ_{j=1..t} c_j m^-j`, exactly.
    pub fn partial_sum(&self, m: &Rational, t: usize) -> Rational {
        let inv = m.recip();
        let mut p = inv.clone();
        let mut s = Rational::zero();
        for c in &self.coeffs[..t] {
            s += c * &p;
            p *= &inv;
        }
        s
    }

    /// `c_j m^-j`.
    pub fn term(&self, m: &Rational, j: usize) -> Rational {
        self.get(j) * m.pow(-(j as i32))
    }
}

/// Enclosure of `½ ln(2m) + γ + Σ_{j=1..t} c_j m^-j` (the last term taken in
/// full when `t = 5`).
pub fn ramanujan_approx(n: HarmonicIndex, t: usize, prec: u32) -> Result<CertifiedReal> {
    if t > 5 {
        return Err(Error::Usage(format!("number of terms must be in 0..=5, got {t}")));
    }
    let wp = prec + GUARD_BITS;
    let m = n.m().as_rational();
    let half_ln = ln_enclosure(&(&m * int(2)), wp)?.mul_pow2(-1);
    let poly = RamanujanCoefficients::new().partial_sum(&m, t);
    Ok((&half_ln + &gamma_at(wp)).add_rational(&poly).with_precision(prec))
}

/// Euler's expansion truncated after `J` Bernoulli terms, with the size of the
/// first omitted term.
#[derive(Clone, Debug)]
pub struct EulerApprox {
    pub value: CertifiedReal,
    /// `|B_{2J+2}| / ((2J+2) n^{2J+2})`.
    pub remainder_bound: Rational,
}

/// Enclosure of `ln n + γ + 1/(2n) − Σ_{j=1..J} B_2j / (2j n^2j)`.
pub fn euler_approx(n: HarmonicIndex, terms: u32, prec: u32) -> Result<EulerApprox> {
    if 2 * terms + 2 > MAX_PUBLIC_INDEX {
        return Err(Error::Usage(format!(
            "at most {} Bernoulli terms are tabulated",
            MAX_PUBLIC_INDEX / 2 - 1
        )));
    }
    let wp = prec + GUARD_BITS;
    let nq = int(n.get());
    let mut poly = (&nq * int(2)).recip();
    for j in 1..=terms {
        poly -= bernoulli(2 * j)? / (int(2 * j) * nq.clone().pow(2 * j as i32));
    }
    let k = 2 * terms + 2;
    let remainder_bound = bernoulli(k)?.abs() / (int(k) * nq.pow(k as i32));
    let value = (&ln_enclosure(&nq, wp)? + &gamma_at(wp)).add_rational(&poly).with_precision(prec);
    Ok(EulerApprox { value, remainder_bound })
}
