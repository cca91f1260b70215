use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

/// Rounding direction for [`Dyadic::round`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
}

/// An exact binary fraction `mantissa · 2^exponent`.
///
/// Kept in canonical form: the mantissa is odd, or zero with exponent zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn shr_floor(x: &BigInt, s: u64) -> BigInt {
    if s == 0 {
        return x.clone();
    }
    match x.sign() {
        Sign::Minus => {
            let mag: BigUint = x.magnitude() - 1u32;
            -BigInt::from((mag >> s) + 1u32)
        }
        _ => BigInt::from(x.magnitude() >> s),
    }
}

fn shr_ceil(x: &BigInt, s: u64) -> BigInt {
    -shr_floor(&-x, s)
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        match mant.trailing_zeros() {
            None => Self::zero(),
            Some(0) => Dyadic { mant, exp },
            Some(tz) => Dyadic { mant: mant >> tz, exp: exp + tz as i64 },
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_int<T: Into<BigInt>>(v: T) -> Self {
        Self::new(v.into(), 0)
    }

    /// `2^e`
    pub fn pow2(e: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: e }
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.mant.sign()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// Number of significant bits in the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// Exponent of the leading bit, i.e. `floor(log2 |x|)`. `None` for zero.
    pub fn msb(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.bits() as i64 - 1)
        }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic::new(&self.mant * &other.mant, self.exp + other.exp)
    }

    /// Keep at most `prec` significant bits, rounding in the given direction.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let s = bits - prec as u64;
        let m = match dir {
            Round::Floor => shr_floor(&self.mant, s),
            Round::Ceil => shr_ceil(&self.mant, s),
        };
        Dyadic::new(m, self.exp + s as i64)
    }

    /// Rounds to `prec` bits and returns the exact rounding error `self − rounded`.
    pub(crate) fn round_with_error(&self, prec: u32) -> (Dyadic, Dyadic) {
        let r = self.round(prec, Round::Floor);
        let err = self.sub(&r);
        (r, err)
    }

    /// Floor (or ceiling) of `num / den` with roughly `prec` significant bits.
    /// The second component is `true` when the quotient is exact.
    pub fn from_ratio(num: &BigInt, den: &BigInt, prec: u32, dir: Round) -> (Dyadic, bool) {
        let (q, ulp) = Self::ratio_with_ulp(num, den, prec, dir);
        (q, ulp.is_none())
    }

    /// Like [`Dyadic::from_ratio`]; on an inexact quotient returns `Some(e)` with
    /// `|num/den − q| < 2^e`.
    pub(crate) fn ratio_with_ulp(
        num: &BigInt,
        den: &BigInt,
        prec: u32,
        dir: Round,
    ) -> (Dyadic, Option<i64>) {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return (Dyadic::zero(), None);
        }
        let (num, den) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
        // the quotient gets prec + 1 or prec + 2 bits
        let shift = prec as i64 + 1 - (num.bits() as i64 - den.bits() as i64);
        let (n, d) = if shift >= 0 {
            (num << shift as u64, den)
        } else {
            (num, den << (-shift) as u64)
        };
        let (q, r) = n.div_mod_floor(&d);
        if r.is_zero() {
            return (Dyadic::new(q, -shift), None);
        }
        let q = if dir == Round::Ceil { q + 1 } else { q };
        (Dyadic::new(q, -shift), Some(-shift))
    }

    pub fn from_rational(q: &Rational, prec: u32, dir: Round) -> (Dyadic, bool) {
        Self::from_ratio(q.numer(), q.denom(), prec, dir)
    }

    /// `a / b` for nonnegative `a` and positive `b`, rounded up to `prec` bits.
    pub(crate) fn div_up(a: &Dyadic, b: &Dyadic, prec: u32) -> Dyadic {
        debug_assert!(!a.is_negative() && b.is_positive());
        if a.is_zero() {
            return Dyadic::zero();
        }
        let (q, _) = Dyadic::from_ratio(&a.mant, &b.mant, prec, Round::Ceil);
        q.mul_pow2(a.exp - b.exp)
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as u64)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.bits();
        let (m, e) = if bits > 60 {
            (shr_floor(&self.mant, bits - 60), self.exp + (bits - 60) as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let m = m.to_f64().unwrap_or(f64::NAN);
        let e = e.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
        m * 2f64.powi(e.clamp(-1100, 1100))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sub(other).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{}", self.mant, self.exp)
    }
}
