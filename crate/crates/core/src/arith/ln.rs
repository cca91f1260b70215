use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::ball::CertifiedReal;
use super::dyadic::Dyadic;
use super::Rational;
use crate::error::{Error, Result};

const GUARD_BITS: u32 = 32;

/// `atanh(z)` for an exact `z` with `|z| ≤ 1/3`, at working precision `wp`.
///
/// Uses `Σ z^(2i+1)/(2i+1)`. Once `|z|^(2i+1)` drops below `2^-wp` the rest of
/// the series is at most `|z|^(2i+1)/(1 − z²) ≤ 2|z|^(2i+1)`, which is added
/// to the radius.
fn atanh_small(z: &Rational, wp: u32) -> CertifiedReal {
    debug_assert!(z.abs() <= Rational::new(1.into(), 3.into()));
    let zb = CertifiedReal::from_rational(z, wp);
    let z2 = &zb * &zb;
    let mut pow = zb;
    let mut sum = CertifiedReal::zero(wp);
    let cutoff = Dyadic::pow2(-(wp as i64) - 2);
    let mut i: u64 = 0;
    loop {
        sum = &sum + &pow.div_int(2 * i + 1);
        pow = &pow * &z2;
        i += 1;
        let m = pow.mag();
        if m < cutoff {
            return sum.add_error(&m.mul_pow2(1));
        }
    }
}

fn ln2_cache() -> &'static Mutex<HashMap<u32, CertifiedReal>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CertifiedReal>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `ln 2 = 2 atanh(1/3)` at working precision `wp`; memoized per precision so
/// results do not depend on call order.
fn ln2(wp: u32) -> CertifiedReal {
    if let Some(v) = ln2_cache().lock().expect("ln2 cache poisoned").get(&wp) {
        return v.clone();
    }
    let v = atanh_small(&Rational::new(1.into(), 3.into()), wp).mul_pow2(1);
    ln2_cache().lock().expect("ln2 cache poisoned").insert(wp, v.clone());
    v
}

/// Enclosure of `ln x` for a positive rational `x`.
///
/// The radius is at most `2^(1−prec)·|ln x| + 2^(−prec)`.
pub fn ln_enclosure(x: &Rational, prec: u32) -> Result<CertifiedReal> {
    if !x.is_positive() {
        return Err(Error::Domain(format!("ln of nonpositive value {x}")));
    }
    if prec == 0 {
        return Err(Error::PrecisionUnavailable { requested: 0, limit: u32::MAX });
    }
    if x.is_one() {
        return Ok(CertifiedReal::zero(prec));
    }
    let num = x.numer();
    let den = x.denom();
    // x = 2^k · y with y in [3/4, 3/2]
    let mut k = num.bits() as i64 - den.bits() as i64;
    let (mut yn, mut yd) = shift_ratio(num, den, k);
    if &yn * 2u32 > &yd * 3u32 {
        k += 1;
        yd *= 2u32;
    } else if &yn * 4u32 < &yd * 3u32 {
        k -= 1;
        yn *= 2u32;
    }
    let wp = prec + GUARD_BITS + (64 - k.unsigned_abs().leading_zeros());
    let z = Rational::new(&yn - &yd, &yn + &yd);
    let mut r = atanh_small(&z, wp).mul_pow2(1);
    if k != 0 {
        r = &r + &ln2(wp).mul_int(k);
    }
    Ok(r.with_precision(prec))
}

/// `(num / 2^k, den)` as an integer pair.
fn shift_ratio(num: &BigInt, den: &BigInt, k: i64) -> (BigInt, BigInt) {
    if k >= 0 {
        (num.clone(), den << k as u64)
    } else {
        (num << (-k) as u64, den.clone())
    }
}
