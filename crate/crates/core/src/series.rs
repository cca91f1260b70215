//! Truncated formal power series with exact rational coefficients.

use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// `Σ_{i<order} c_i x^i`, arithmetic taken modulo `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rational>,
}

impl PowerSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order, Rational::zero());
        PowerSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// `c + x`
    pub fn linear(c: Rational, order: usize) -> Self {
        Self::new(vec![c, Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n - i) {
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(Rational::one(), self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = self.coeff(0);
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.order());
        for k in 0..self.order() {
            if k == 0 {
                out.push(inv0.clone());
                continue;
            }
            let mut s = Rational::zero();
            for i in 1..=k {
                s += &self.coeffs[i] * &out[k - i];
            }
            out.push(-s * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Drops the first `k` coefficients: `(f − Σ_{i<k} c_i x^i) / x^k`.
    pub fn shift_down(&self, k: usize) -> Self {
        let order = self.order().saturating_sub(k);
        PowerSeries::new(self.coeffs.iter().skip(k).cloned().collect(), order)
    }

    /// The polynomial `p(c + x)` (coefficients of `p` in ascending order).
    pub fn taylor_shift(p: &[Rational], c: &Rational, order: usize) -> Self {
        let lin = Self::linear(c.clone(), order);
        let mut acc = Self::constant(Rational::zero(), order);
        for a in p.iter().rev() {
            acc = acc.mul(&lin).add(&Self::constant(a.clone(), order));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn geometric_series() {
        let one_minus_x = PowerSeries::new(vec![ratio(1, 1), ratio(-1, 1)], 6);
        let g = one_minus_x.recip().unwrap();
        assert!(g.coeffs().iter().all(|c| c == &ratio(1, 1)));
        assert_eq!(g.mul(&one_minus_x), PowerSeries::constant(ratio(1, 1), 6));
    }

    #[test]
    fn taylor_shift_of_square() {
        // (2 + x)^2 = 4 + 4x + x^2
        let p = [ratio(0, 1), ratio(0, 1), ratio(1, 1)];
        let s = PowerSeries::taylor_shift(&p, &ratio(2, 1), 4);
        assert_eq!(s.coeffs(), &[ratio(4, 1), ratio(4, 1), ratio(1, 1), ratio(0, 1)]);
    }

    #[test]
    fn zero_constant_term_has_no_inverse() {
        assert!(PowerSeries::linear(ratio(0, 1), 3).recip().is_err());
    }
}
