use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::decimal::{to_scientific, MagnitudeRounding};
use super::dyadic::{Dyadic, Round};
use super::Rational;
use crate::error::{Error, Result};

/// Significant bits kept in a radius. Radii are always rounded up.
const RAD_BITS: u32 = 64;

/// A self-validating real number: the exact value `x` it stands for always
/// satisfies `|x − midpoint| ≤ radius`.
///
/// Every operation rounds the midpoint to the working precision and folds the
/// rounding error, together with the propagated input radii, into the
/// radius of the result.
#[derive(Clone, PartialEq, Eq)]
pub struct CertifiedReal {
    mid: Dyadic,
    rad: Dyadic,
    prec: u32,
}

impl CertifiedReal {
    /// Rounds an exact midpoint to `prec` bits and widens `extra_rad` by the
    /// rounding error.
    fn from_parts(mid: Dyadic, extra_rad: Dyadic, prec: u32) -> Self {
        let (m, err) = mid.round_with_error(prec);
        let rad = extra_rad.add(&err.abs()).round(RAD_BITS, Round::Ceil);
        CertifiedReal { mid: m, rad, prec }
    }

    pub fn with_radius(mid: Dyadic, rad: Dyadic, prec: u32) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        Self::from_parts(mid, rad, prec)
    }

    pub fn zero(prec: u32) -> Self {
        CertifiedReal { mid: Dyadic::zero(), rad: Dyadic::zero(), prec }
    }

    pub fn from_dyadic(d: Dyadic, prec: u32) -> Self {
        Self::from_parts(d, Dyadic::zero(), prec)
    }

    pub fn from_int<T: Into<BigInt>>(v: T, prec: u32) -> Self {
        Self::from_dyadic(Dyadic::from_int(v), prec)
    }

    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mid, ulp) = Dyadic::ratio_with_ulp(num, den, prec, Round::Floor);
        let rad = ulp.map(Dyadic::pow2).unwrap_or_else(Dyadic::zero);
        Ok(Self::from_parts(mid, rad, prec))
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Self {
        // a BigRational never carries a zero denominator
        Self::from_ratio(q.numer(), q.denom(), prec).expect("nonzero denominator")
    }

    pub fn midpoint(&self) -> &Dyadic {
        &self.mid
    }

    pub fn radius(&self) -> &Dyadic {
        &self.rad
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad)
    }

    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad)
    }

    /// Upper bound on the absolute value of every point of the ball.
    pub fn mag(&self) -> Dyadic {
        self.mid.abs().add(&self.rad)
    }

    pub fn width(&self) -> Dyadic {
        self.rad.mul_pow2(1)
    }

    pub fn is_positive(&self) -> bool {
        self.lower().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper().is_negative()
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        let d = q - self.mid.to_rational();
        d.abs() <= self.rad.to_rational()
    }

    pub fn contains(&self, other: &CertifiedReal) -> bool {
        other.lower() >= self.lower() && other.upper() <= self.upper()
    }

    pub fn overlaps(&self, other: &CertifiedReal) -> bool {
        self.mid.sub(&other.mid).abs() <= self.rad.add(&other.rad)
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn rad_f64(&self) -> f64 {
        self.rad.to_f64()
    }

    pub fn with_precision(&self, prec: u32) -> Self {
        Self::from_parts(self.mid.clone(), self.rad.clone(), prec)
    }

    /// Widens the ball by a nonnegative error bound.
    pub fn add_error(&self, err: &Dyadic) -> Self {
        assert!(!err.is_negative(), "negative error bound");
        CertifiedReal {
            mid: self.mid.clone(),
            rad: self.rad.add(err).round(RAD_BITS, Round::Ceil),
            prec: self.prec,
        }
    }

    /// Widens the ball by `|bound|`, rounded up to a binary fraction.
    pub fn add_error_rational(&self, bound: &Rational) -> Self {
        let (up, _) = Dyadic::from_rational(&bound.abs(), RAD_BITS, Round::Ceil);
        self.add_error(&up)
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        self + &Self::from_rational(q, self.prec)
    }

    pub fn sub_rational(&self, q: &Rational) -> Self {
        self - &Self::from_rational(q, self.prec)
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        self * &Self::from_rational(q, self.prec)
    }

    pub fn mul_int<T: Into<BigInt>>(&self, k: T) -> Self {
        let k = Dyadic::from_int(k);
        Self::from_parts(self.mid.mul(&k), self.rad.mul(&k.abs()), self.prec)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        CertifiedReal { mid: self.mid.mul_pow2(k), rad: self.rad.mul_pow2(k), prec: self.prec }
    }

    pub fn div(&self, other: &CertifiedReal) -> Result<Self> {
        let prec = self.prec.max(other.prec);
        let den_abs = other.mid.abs();
        if den_abs <= other.rad {
            return Err(Error::DivisionByZero);
        }
        let (q0, ulp) = Dyadic::ratio_with_ulp(
            self.mid.mantissa(),
            other.mid.mantissa(),
            prec + 2,
            Round::Floor,
        );
        let shift = self.mid.exponent() - other.mid.exponent();
        let q0 = q0.mul_pow2(shift);
        let mut rad = ulp.map(|e| Dyadic::pow2(e + shift)).unwrap_or_else(Dyadic::zero);
        if !self.rad.is_zero() || !other.rad.is_zero() {
            // |x/y − m1/m2| ≤ (r1 + r2·|m1/m2|) / (|m2| − r2)
            let ratio_up = Dyadic::div_up(&self.mid.abs(), &den_abs, RAD_BITS);
            let num = self.rad.add(&other.rad.mul(&ratio_up)).round(RAD_BITS, Round::Ceil);
            let den = den_abs.sub(&other.rad).round(RAD_BITS, Round::Floor);
            rad = rad.add(&Dyadic::div_up(&num, &den, RAD_BITS));
        }
        Ok(Self::from_parts(q0, rad, prec))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::from_int(1, self.prec).div(self)
    }

    pub fn div_int(&self, k: u64) -> Self {
        assert!(k != 0, "division by zero");
        self.div(&Self::from_int(k, self.prec)).expect("nonzero divisor")
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_int(1, self.prec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Midpoint (rounded to nearest) and a radius that also absorbs the
    /// decimal rounding of the midpoint, both with `digits` significant digits.
    pub fn to_decimal_strings(&self, digits: u32) -> (String, String) {
        let mid = self.mid.to_rational();
        let (mid_str, printed) = to_scientific(&mid, digits, MagnitudeRounding::Nearest);
        let rad = self.rad.to_rational() + (mid - printed).abs();
        let (rad_str, _) = to_scientific(&rad, digits, MagnitudeRounding::Up);
        (mid_str, rad_str)
    }
}

impl fmt::Debug for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, r) = self.to_decimal_strings(20);
        write!(f, "[{m} ± {r}]")
    }
}

impl fmt::Display for CertifiedReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, r) = self.to_decimal_strings(f.precision().unwrap_or(20).max(1) as u32);
        write!(f, "{m} ± {r}")
    }
}

impl<'a> Add<&'a CertifiedReal> for &'a CertifiedReal {
    type Output = CertifiedReal;
    fn add(self, other: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::from_parts(
            self.mid.add(&other.mid),
            self.rad.add(&other.rad),
            self.prec.max(other.prec),
        )
    }
}

impl<'a> Sub<&'a CertifiedReal> for &'a CertifiedReal {
    type Output = CertifiedReal;
    fn sub(self, other: &CertifiedReal) -> CertifiedReal {
        CertifiedReal::from_parts(
            self.mid.sub(&other.mid),
            self.rad.add(&other.rad),
            self.prec.max(other.prec),
        )
    }
}

impl<'a> Mul<&'a CertifiedReal> for &'a CertifiedReal {
    type Output = CertifiedReal;
    fn mul(self, other: &CertifiedReal) -> CertifiedReal {
        let rad = self
            .mid
            .abs()
            .mul(&other.rad)
            .add(&other.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        CertifiedReal::from_parts(self.mid.mul(&other.mid), rad, self.prec.max(other.prec))
    }
}

impl Neg for &CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        CertifiedReal { mid: self.mid.neg(), rad: self.rad.clone(), prec: self.prec }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CertifiedReal> for CertifiedReal {
            type Output = CertifiedReal;
            fn $m(self, other: CertifiedReal) -> CertifiedReal {
                (&self).$m(&other)
            }
        }
        impl<'a> $tr<&'a CertifiedReal> for CertifiedReal {
            type Output = CertifiedReal;
            fn $m(self, other: &CertifiedReal) -> CertifiedReal {
                (&self).$m(other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CertifiedReal {
    type Output = CertifiedReal;
    fn neg(self) -> CertifiedReal {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn thirds_add_up_to_one() {
        let third = CertifiedReal::from_rational(&q(1, 3), 80);
        let one = &(&third + &third) + &third;
        assert!(one.contains_rational(&Rational::one()));
        assert!(one.rad_f64() < 1e-22);
    }

    #[test]
    fn exact_dyadic_inputs_stay_exact() {
        let a = CertifiedReal::from_rational(&q(3, 8), 53);
        let b = CertifiedReal::from_rational(&q(-5, 4), 53);
        let p = &a * &b;
        assert!(p.radius().is_zero());
        assert_eq!(p.midpoint().to_rational(), q(-15, 32));
    }

    #[test]
    fn division_propagates_radius() {
        let x = CertifiedReal::with_radius(Dyadic::from_int(1), Dyadic::pow2(-10), 64);
        let y = CertifiedReal::with_radius(Dyadic::from_int(3), Dyadic::pow2(-10), 64);
        let z = x.div(&y).unwrap();
        for (xn, yn) in [(1025i64, 3071i64), (1023, 3073), (1025, 3073), (1023, 3071)] {
            // corners of the input box, scaled by 1024
            assert!(z.contains_rational(&q(xn, yn)));
        }
    }

    #[test]
    fn division_by_ball_around_zero_fails() {
        let x = CertifiedReal::from_int(1, 64);
        let y = CertifiedReal::with_radius(Dyadic::pow2(-20), Dyadic::pow2(-19), 64);
        assert_eq!(x.div(&y), Err(Error::DivisionByZero));
        assert_eq!(CertifiedReal::from_ratio(&1.into(), &0.into(), 64), Err(Error::DivisionByZero));
    }

    #[test]
    fn decimal_radius_covers_midpoint_rounding() {
        let x = CertifiedReal::from_rational(&q(1, 3), 200);
        let (m, r) = x.to_decimal_strings(10);
        assert_eq!(m, "3.333333333e-1");
        assert_eq!(r, "3.333333334e-11");
    }
}
