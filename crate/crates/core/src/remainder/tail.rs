use num_traits::{One, Signed, Zero};

use super::zeta::hurwitz_tail;
use crate::arith::{int, CertifiedReal, Rational};
use crate::error::{Error, Result};
use crate::harmonic::HarmonicIndex;
use crate::series::PowerSeries;

/// The tail series `Σ_{k>n} p(k) / (k^a (k²−1)^b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailSpec {
    /// Coefficients of `p`, lowest degree first, without trailing zeros.
    numerator: Vec<Rational>,
    a: u32,
    b: u32,
}

impl TailSpec {
    /// Fails unless `deg p + 1 < a + 2b`.
    pub fn new(mut numerator: Vec<Rational>, a: u32, b: u32) -> Result<Self> {
        while numerator.last().is_some_and(Zero::is_zero) {
            numerator.pop();
        }
        let degree = numerator.len().saturating_sub(1);
        if !numerator.is_empty() && degree as u64 + 1 >= a as u64 + 2 * b as u64 {
            return Err(Error::NotSummable { degree, a, b });
        }
        Ok(TailSpec { numerator, a, b })
    }

    /// `c / (k^a (k²−1)^b)`.
    pub fn monomial(c: Rational, a: u32, b: u32) -> Result<Self> {
        Self::new(vec![c], a, b)
    }

    pub fn numerator(&self) -> &[Rational] {
        &self.numerator
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    pub fn degree(&self) -> Option<usize> {
        self.numerator.len().checked_sub(1)
    }

    /// `a + 2b − deg p`: terms decay like `k^-decay`.
    pub fn decay(&self) -> u32 {
        self.a + 2 * self.b - self.degree().unwrap_or(0) as u32
    }

    pub fn eval_numerator(&self, k: &Rational) -> Rational {
        self.numerator.iter().rev().fold(Rational::zero(), |acc, c| acc * k + c)
    }

    /// The exact summand at `k ≥ 2`.
    pub fn term(&self, k: u64) -> Rational {
        assert!(k >= 2, "summand needs k ≥ 2");
        let kq = int(k);
        let den = kq.clone().pow(self.a as i32) * (&kq * &kq - int(1)).pow(self.b as i32);
        self.eval_numerator(&kq) / den
    }

    /// Exact partial fractions over the poles `k = 1, 0, −1`.
    pub fn partial_fractions(&self) -> PartialFractions {
        let (a, b) = (self.a, self.b);
        let order = a.max(b) as usize + 1;
        let one = Rational::one();
        let p = &self.numerator;

        // k = 1 + u: p(1+u) (1+u)^-a (2+u)^-b
        let g1 = PowerSeries::taylor_shift(p, &one, order)
            .mul(&PowerSeries::linear(one.clone(), order).pow(a).recip().expect("unit constant"))
            .mul(&PowerSeries::linear(int(2), order).pow(b).recip().expect("nonzero constant"));
        // k: p(k) (k²−1)^-b
        let km1 = PowerSeries::new(vec![int(-1), int(0), int(1)], order);
        let g0 = PowerSeries::new(p.clone(), order).mul(&km1.pow(b).recip().expect("nonzero constant"));
        // k = −1 + u: p(u−1) (u−1)^-a (u−2)^-b
        let gm1 = PowerSeries::taylor_shift(p, &-one.clone(), order)
            .mul(&PowerSeries::linear(-one, order).pow(a).recip().expect("nonzero constant"))
            .mul(&PowerSeries::linear(int(-2), order).pow(b).recip().expect("nonzero constant"));

        let laurent = |g: &PowerSeries, pole: u32| -> Vec<Rational> {
            (1..=pole).map(|s| g.coeff((pole - s) as usize)).collect()
        };
        PartialFractions { at_one: laurent(&g1, b), at_zero: laurent(&g0, a), at_minus_one: laurent(&gm1, b) }
    }
}

/// `f(k) = Σ_s α_s/(k−1)^s + β_s/k^s + γ_s/(k+1)^s`, with `vec[s−1]` holding the
/// coefficient of the `s`-th power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialFractions {
    pub at_one: Vec<Rational>,
    pub at_zero: Vec<Rational>,
    pub at_minus_one: Vec<Rational>,
}

impl PartialFractions {
    pub fn eval(&self, k: u64) -> Rational {
        let mut s = Rational::zero();
        for (shift, coeffs) in [(-1i64, &self.at_one), (0, &self.at_zero), (1, &self.at_minus_one)] {
            let base = int(k as i64 + shift);
            for (i, c) in coeffs.iter().enumerate() {
                s += c / base.clone().pow(i as i32 + 1);
            }
        }
        s
    }

    fn simple(coeffs: &[Rational]) -> Rational {
        coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    fn max_abs(&self) -> Rational {
        self.at_one
            .iter()
            .chain(&self.at_zero)
            .chain(&self.at_minus_one)
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

/// Certified `Σ_{k>n} p(k) / (k^a (k²−1)^b)`.
///
/// The summand is split into partial fractions. Simple poles telescope to a
/// closed form; every higher pole contributes a Hurwitz-zeta tail summed with
/// a rigorous Euler–Maclaurin remainder.
pub fn tail_rational_sum(n: HarmonicIndex, spec: &TailSpec, prec: u32) -> CertifiedReal {
    if spec.numerator.is_empty() {
        return CertifiedReal::zero(prec);
    }
    let pf = spec.partial_fractions();
    let n = n.get();
    let big_n = n + 1;

    // components of size ~1/n cancel down to ~n^-(decay−1)
    let coef_bits = {
        let m = pf.max_abs();
        (m.numer().bits() as i64 - m.denom().bits() as i64).max(0) as u32
    };
    let n_bits = 64 - (n + 2).leading_zeros();
    let wp = prec + 32 + spec.decay() * n_bits + coef_bits;

    let (alpha1, beta1) = (PartialFractions::simple(&pf.at_one), PartialFractions::simple(&pf.at_zero));
    debug_assert!((&alpha1 + &beta1 + PartialFractions::simple(&pf.at_minus_one)).is_zero());
    let telescoped = &alpha1 * (int(n).recip() + int(big_n).recip()) + &beta1 / int(big_n);

    let mut sum = CertifiedReal::from_rational(&telescoped, wp);
    for (start, coeffs) in [(n, &pf.at_one), (big_n, &pf.at_zero), (big_n + 1, &pf.at_minus_one)] {
        for (i, c) in coeffs.iter().enumerate().skip(1) {
            if c.is_zero() {
                continue;
            }
            let z = hurwitz_tail(i as u32 + 1, start, wp);
            sum = &sum + &z.mul_rational(c);
        }
    }
    sum.with_precision(prec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn idx(n: u64) -> HarmonicIndex {
        HarmonicIndex::new(n).unwrap()
    }

    #[test]
    fn rejects_non_summable() {
        assert!(matches!(TailSpec::monomial(ratio(1, 1), 1, 0), Err(Error::NotSummable { .. })));
        assert!(matches!(
            TailSpec::new(vec![ratio(0, 1), ratio(0, 1), ratio(1, 1)], 1, 1),
            Err(Error::NotSummable { degree: 2, .. })
        ));
        assert!(TailSpec::new(vec![ratio(3, 1), ratio(0, 1), ratio(41, 1)], 5, 5).is_ok());
    }

    #[test]
    fn partial_fractions_reproduce_summand() {
        let specs = [
            TailSpec::monomial(ratio(1, 1), 1, 1).unwrap(),
            TailSpec::monomial(ratio(1, 1), 3, 3).unwrap(),
            TailSpec::monomial(ratio(1, 1), 1, 6).unwrap(),
            TailSpec::new(vec![ratio(3, 1), ratio(0, 1), ratio(41, 1)], 5, 5).unwrap(),
            TailSpec::new(vec![ratio(1, 2), ratio(-2, 3)], 4, 0).unwrap(),
        ];
        for spec in &specs {
            let pf = spec.partial_fractions();
            for k in [2u64, 3, 10, 1001] {
                assert_eq!(pf.eval(k), spec.term(k), "{spec:?} at k = {k}");
            }
        }
    }

    #[test]
    fn telescoping_quarter() {
        // Σ_{k≥2} 1/(k(k²−1)) = 1/4
        let spec = TailSpec::monomial(ratio(1, 1), 1, 1).unwrap();
        let s = tail_rational_sum(idx(1), &spec, 128);
        assert!(s.contains_rational(&ratio(1, 4)));
        assert!(s.rad_f64() < 1e-30);
    }

    #[test]
    fn rapid_decay_far_out() {
        // first term < tail < c · ∫_{n−1}^∞ x^(deg p − a − 2b) dx with p(k) ≤ c k^deg p
        let n = 1_000_000u64;
        for (spec, c) in [
            (TailSpec::monomial(ratio(1, 1), 1, 3).unwrap(), 1),
            (TailSpec::monomial(ratio(1, 1), 3, 3).unwrap(), 1),
            (TailSpec::new(vec![ratio(3, 1), ratio(0, 1), ratio(41, 1)], 5, 5).unwrap(), 44),
        ] {
            let s = tail_rational_sum(idx(n), &spec, 64);
            let d = spec.decay() as i32;
            let majorant = ratio(c, 1) * int(n - 1).pow(1 - d) / int(d as i64 - 1);
            assert!(s.sub_rational(&spec.term(n + 1)).is_positive());
            assert!(s.sub_rational(&majorant).is_negative());
        }
    }
}
