use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::ball::CertifiedReal;
use super::Rational;
use crate::error::{Error, Result};

/// How far to escalate working precision when a strict inequality does not
/// resolve at first try.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    initial_bits: u32,
    max_bits: u32,
    growth_factor: u32,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy { initial_bits: 128, max_bits: 4096, growth_factor: 2 }
    }
}

impl PrecisionPolicy {
    pub fn new(initial_bits: u32, max_bits: u32, growth_factor: u32) -> Result<Self> {
        if initial_bits == 0 {
            return Err(Error::InvalidPolicy("initial_bits must be positive".into()));
        }
        if initial_bits > max_bits {
            return Err(Error::InvalidPolicy(format!(
                "initial_bits {initial_bits} exceeds max_bits {max_bits}"
            )));
        }
        if growth_factor < 2 {
            return Err(Error::InvalidPolicy("growth_factor must be at least 2".into()));
        }
        Ok(PrecisionPolicy { initial_bits, max_bits, growth_factor })
    }

    /// Default escalation starting from `initial_bits`.
    pub fn starting_at(initial_bits: u32) -> Result<Self> {
        let d = Self::default();
        Self::new(initial_bits, d.max_bits.max(initial_bits), d.growth_factor)
    }

    pub fn initial_bits(&self) -> u32 {
        self.initial_bits
    }

    pub fn max_bits(&self) -> u32 {
        self.max_bits
    }

    pub fn growth_factor(&self) -> u32 {
        self.growth_factor
    }

    /// The precisions tried in order: `initial`, `initial·g`, … and finally
    /// `max_bits` itself.
    pub fn levels(&self) -> Vec<u32> {
        let mut out = vec![self.initial_bits];
        let mut p = self.initial_bits;
        while p < self.max_bits {
            p = p.saturating_mul(self.growth_factor).min(self.max_bits);
            out.push(p);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StrictSign {
    Negative,
    Positive,
    Unresolved,
}

/// Decides the strict sign of a quantity that can be recomputed at any
/// precision, escalating per `policy`. Zero is never resolved.
pub fn resolve_strict_sign<F>(mut value: F, policy: &PrecisionPolicy) -> StrictSign
where
    F: FnMut(u32) -> CertifiedReal,
{
    for bits in policy.levels() {
        let v = value(bits);
        if v.is_positive() {
            return StrictSign::Positive;
        }
        if v.is_negative() {
            return StrictSign::Negative;
        }
    }
    StrictSign::Unresolved
}

/// Result of certifying `lo < x < hi`.
#[derive(Clone, Debug)]
pub struct IntervalCertificate {
    /// `Some(true)` pass, `Some(false)` a bound is certainly violated,
    /// `None` unresolved.
    pub holds: Option<bool>,
    /// Enclosure at the highest precision that was evaluated.
    pub enclosure: CertifiedReal,
    pub bits: u32,
}

/// Certifies `lo < x < hi` by resolving the signs of `x − lo` and `hi − x`.
/// Evaluations of `x` are shared between the two sides.
pub fn certify_open_interval<F>(
    mut value: F,
    lo: &Rational,
    hi: &Rational,
    policy: &PrecisionPolicy,
) -> IntervalCertificate
where
    F: FnMut(u32) -> CertifiedReal,
{
    let mut memo: HashMap<u32, CertifiedReal> = HashMap::new();
    let mut eval = |bits: u32| -> CertifiedReal {
        memo.entry(bits).or_insert_with(|| value(bits)).clone()
    };
    let lower = resolve_strict_sign(|b| eval(b).sub_rational(lo), policy);
    let upper = if lower == StrictSign::Negative {
        StrictSign::Unresolved
    } else {
        resolve_strict_sign(|b| -eval(b).sub_rational(hi), policy)
    };
    let holds = match (lower, upper) {
        (StrictSign::Positive, StrictSign::Positive) => Some(true),
        (StrictSign::Negative, _) | (_, StrictSign::Negative) => Some(false),
        _ => None,
    };
    let bits = memo.keys().copied().max().unwrap_or(policy.initial_bits());
    IntervalCertificate { holds, enclosure: memo.remove(&bits).expect("evaluated"), bits }
}
