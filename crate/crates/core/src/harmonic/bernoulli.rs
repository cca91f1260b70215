use std::collections::BTreeMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Largest index served by [`bernoulli`].
pub const MAX_PUBLIC_INDEX: u32 = 64;

fn table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Extends `b` (holding `B_0..B_{len-1}`) through `B_k` with
/// `B_j = −1/(j+1) · Σ_{i<j} C(j+1, i) B_i`.
fn extend(b: &mut Vec<Rational>, k: usize) {
    while b.len() <= k {
        let j = b.len();
        if j >= 3 && j % 2 == 1 {
            b.push(Rational::zero());
            continue;
        }
        let mut sum = Rational::zero();
        let mut binom = BigInt::one(); // C(j+1, 0)
        for (i, bi) in b.iter().enumerate() {
            if !bi.is_zero() {
                sum += bi * Rational::from_integer(binom.clone());
            }
            binom = binom * BigInt::from(j + 1 - i) / BigInt::from(i + 1);
        }
        b.push(-sum / Rational::from_integer(BigInt::from(j + 1)));
    }
}

/// Bernoulli number `B_k` (convention `B_1 = −1/2`) for any `k`.
pub fn bernoulli_number(k: usize) -> Rational {
    if let Some(v) = table().read().expect("bernoulli table poisoned").get(k) {
        return v.clone();
    }
    let mut t = table().write().expect("bernoulli table poisoned");
    extend(&mut t, k);
    t[k].clone()
}

/// Exact `B_k` for even `k` in `2..=64`.
pub fn bernoulli(k: u32) -> Result<Rational> {
    if k < 2 || k % 2 == 1 || k > MAX_PUBLIC_INDEX {
        return Err(Error::Usage(format!(
            "Bernoulli index must be even and in 2..={MAX_PUBLIC_INDEX}, got {k}"
        )));
    }
    Ok(bernoulli_number(k as usize))
}

/// Even-index Bernoulli numbers `B_2j` keyed by `2j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: BTreeMap<u32, Rational>,
}

impl BernoulliTable {
    pub fn up_to(max_even: u32) -> Result<Self> {
        let mut values = BTreeMap::new();
        for k in (2..=max_even).step_by(2) {
            values.insert(k, bernoulli(k)?);
        }
        Ok(BernoulliTable { values })
    }

    pub fn get(&self, k: u32) -> Option<&Rational> {
        self.values.get(&k)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.values.iter().map(|(k, v)| (*k, v))
    }

    /// Checks `Σ_{i=0..k} C(k+1, i) B_i = 0` for every `k` up to the largest
    /// stored index, using the stored even values and `B_0 = 1`, `B_1 = −1/2`,
    /// `B_odd = 0`.
    pub fn satisfies_recurrence(&self) -> bool {
        let max = self.values.keys().next_back().copied().unwrap_or(0);
        let b = |i: u32| -> Rational {
            match i {
                0 => Rational::one(),
                1 => Rational::new((-1).into(), 2.into()),
                i if i % 2 == 1 => Rational::zero(),
                i => self.values[&i].clone(),
            }
        };
        (1..=max).all(|k| {
            let mut binom = BigInt::one();
            let mut sum = Rational::zero();
            for i in 0..=k {
                sum += b(i) * Rational::from_integer(binom.clone());
                binom = binom * BigInt::from(k + 1 - i) / BigInt::from(i + 1);
            }
            sum.is_zero()
        })
    }
}
