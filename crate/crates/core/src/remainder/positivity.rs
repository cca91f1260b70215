use num_bigint::BigInt;
use rayon::prelude::*;

use super::identities::IdentityId;
use crate::error::{Error, Result};
use crate::harmonic::HarmonicIndex;

/// `6112/15015 · k^-13 − 1024/45045 · (k−1)^-15 > 0`, compared as
/// `6112·45045·(k−1)^15 > 1024·15015·k^13`.
pub fn pos_a_summand_positive(k: u64) -> bool {
    assert!(k >= 2, "POS-A summand needs k ≥ 2");
    let lhs = BigInt::from(6112u32 * 45045) * BigInt::from(k - 1).pow(15u32);
    let rhs = BigInt::from(1024u32 * 15015) * BigInt::from(k).pow(13u32);
    lhs > rhs
}

/// `1/2310m⁵ − 4688/(135135 (n−½)^12) > 0`, compared as
/// `135135·(2n−1)^12 > 2^12·4688·2310·m⁵`.
pub fn pos_b_positive(n: HarmonicIndex) -> bool {
    let lhs = BigInt::from(135_135u32) * BigInt::from(2 * n.get() - 1).pow(12u32);
    let rhs = BigInt::from(4096u64 * 4688 * 2310) * BigInt::from(n.m().get()).pow(5u32);
    lhs > rhs
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositivityOutcome {
    pub id: IdentityId,
    pub n: HarmonicIndex,
    pub limit: u64,
    /// Whether `n` lies where the claim is asserted (`n ≥ 3` for POS-A,
    /// `n ≥ 5` for POS-B). Outside it the outcome is informational.
    pub in_guaranteed_region: bool,
    pub checked: u64,
    pub first_failure: Option<u64>,
    pub holds: bool,
}

/// Exact sign checks of the two bracket lemmas.
///
/// POS-A tests the summand at every `k` in `(n, limit]`. POS-B tests the
/// bracket at every index in `[n, max(n, limit)]`.
pub fn positivity_check(id: IdentityId, n: HarmonicIndex, limit: u64) -> Result<PositivityOutcome> {
    let (range, region, test): (Vec<u64>, bool, fn(u64) -> bool) = match id {
        IdentityId::PosA => ((n.get() + 1..=limit).collect(), n.get() >= 3, pos_a_summand_positive),
        IdentityId::PosB => (
            (n.get()..=limit.max(n.get())).collect(),
            n.get() >= 5,
            |i| pos_b_positive(HarmonicIndex::new(i).expect("index in range")),
        ),
        other => return Err(Error::Usage(format!("{other} is not a positivity lemma"))),
    };
    let first_failure = range.par_iter().copied().find_first(|&i| !test(i));
    Ok(PositivityOutcome {
        id,
        n,
        limit,
        in_guaranteed_region: region,
        checked: range.len() as u64,
        first_failure,
        holds: first_failure.is_none(),
    })
}
