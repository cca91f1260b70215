use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{int, ratio, Rational};
use crate::error::{Error, Result};

/// The displayed equalities and inequalities of the proof chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "PF1")]
    Pf1,
    #[serde(rename = "PF2")]
    Pf2,
    #[serde(rename = "KU3")]
    Ku3,
    #[serde(rename = "KU4")]
    Ku4,
    #[serde(rename = "KU5")]
    Ku5,
    #[serde(rename = "IBP1")]
    Ibp1,
    #[serde(rename = "IBP2")]
    Ibp2,
    #[serde(rename = "IBP3")]
    Ibp3,
    #[serde(rename = "POS-A")]
    PosA,
    #[serde(rename = "POS-B")]
    PosB,
}

impl IdentityId {
    pub const ALL: [IdentityId; 10] = [
        IdentityId::Pf1,
        IdentityId::Pf2,
        IdentityId::Ku3,
        IdentityId::Ku4,
        IdentityId::Ku5,
        IdentityId::Ibp1,
        IdentityId::Ibp2,
        IdentityId::Ibp3,
        IdentityId::PosA,
        IdentityId::PosB,
    ];

    /// Per-term rational identities, checkable exactly at each `k`.
    pub const EXACT: [IdentityId; 5] =
        [IdentityId::Pf1, IdentityId::Pf2, IdentityId::Ku3, IdentityId::Ku4, IdentityId::Ku5];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Pf1 => "PF1",
            IdentityId::Pf2 => "PF2",
            IdentityId::Ku3 => "KU3",
            IdentityId::Ku4 => "KU4",
            IdentityId::Ku5 => "KU5",
            IdentityId::Ibp1 => "IBP1",
            IdentityId::Ibp2 => "IBP2",
            IdentityId::Ibp3 => "IBP3",
            IdentityId::PosA => "POS-A",
            IdentityId::PosB => "POS-B",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub id: IdentityId,
    pub k: u64,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// `1/((k−1)^s k^s) − 1/(k^s (k+1)^s)`, the summand whose sum over `k > n`
/// telescopes to `1/(n(n+1))^s = 1/(2m)^s`.
fn telescope(k: &Rational, s: i32) -> Rational {
    let one = int(1);
    let km = k - &one;
    let kp = k + &one;
    (km * k).pow(-s) - (k * kp).pow(-s)
}

/// `1 / (k^a (k²−1)^b)`
fn kernel(k: &Rational, a: i32, b: i32) -> Rational {
    (k.pow(a) * (k * k - int(1)).pow(b)).recip()
}

/// Checks one of the exact per-term identities at `k ≥ 2` in rational
/// arithmetic. Both sides are returned whether or not they agree.
pub fn identity_check(id: IdentityId, k: u64) -> Result<IdentityOutcome> {
    if k < 2 {
        return Err(Error::Usage(format!("identities are checked for k ≥ 2, got {k}")));
    }
    let kq = int(k);
    let one = int(1);
    let (lhs, rhs) = match id {
        IdentityId::Pf1 => (
            ratio(1, 6) * telescope(&kq, 1),
            ratio(1, 3) * kernel(&kq, 1, 1),
        ),
        IdentityId::Pf2 => {
            let (km, kp) = (&kq - &one, &kq + &one);
            let bracket = (int(4) * &km * &km).recip() - (int(2) * &kq * &km).recip()
                - (int(4) * &kp * &kp).recip()
                + (int(2) * &kq * &kp).recip();
            (ratio(2, 15) * bracket, ratio(2, 15) * kernel(&kq, 1, 2))
        }
        IdentityId::Ku3 => (
            kernel(&kq, 1, 3) - ratio(1, 6) * telescope(&kq, 3),
            ratio(-1, 3) * kernel(&kq, 3, 3),
        ),
        IdentityId::Ku4 => (
            ratio(-8, 315) * kernel(&kq, 3, 3) - ratio(16, 315) * kernel(&kq, 1, 4)
                + ratio(1, 105) * telescope(&kq, 4),
            ratio(32, 315) * kernel(&kq, 3, 4),
        ),
        IdentityId::Ku5 => (
            ratio(32, 315) * kernel(&kq, 3, 4) + ratio(128, 3465) * kernel(&kq, 1, 5)
                - ratio(16, 1155) * telescope(&kq, 5),
            ratio(-32, 3465) * (int(41) * &kq * &kq + int(3)) * kernel(&kq, 5, 5),
        ),
        other => {
            return Err(Error::Usage(format!(
                "{other} is not a per-term rational identity; use decomposition_check or positivity_check"
            )))
        }
    };
    let holds = lhs == rhs;
    Ok(IdentityOutcome { id, k, lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_values_at_two() {
        let pf1 = identity_check(IdentityId::Pf1, 2).unwrap();
        assert!(pf1.holds);
        assert_eq!(pf1.lhs, ratio(1, 18));
        let ku3 = identity_check(IdentityId::Ku3, 2).unwrap();
        assert!(ku3.holds);
        assert_eq!(ku3.rhs, ratio(-1, 648));
        let ku5 = identity_check(IdentityId::Ku5, 2).unwrap();
        assert!(ku5.holds);
        assert_eq!(ku5.lhs, ratio(-167, 841_995));
        assert_eq!(ku5.rhs, ratio(-167, 841_995));
    }

    #[test]
    fn exact_identities_hold_on_a_range() {
        for id in IdentityId::EXACT {
            for k in 2..=60 {
                assert!(identity_check(id, k).unwrap().holds, "{id} at k = {k}");
            }
        }
    }

    #[test]
    fn perturbed_coefficient_is_caught() {
        // the telescope weight in KU4 is pinned down: 1/104 would fail
        let k = int(5);
        let lhs = ratio(-8, 315) * kernel(&k, 3, 3) - ratio(16, 315) * kernel(&k, 1, 4)
            + ratio(1, 104) * telescope(&k, 4);
        assert_ne!(lhs, ratio(32, 315) * kernel(&k, 3, 4));
    }

    #[test]
    fn names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.to_string().parse::<IdentityId>().unwrap(), id);
        }
        assert!("KU6".parse::<IdentityId>().is_err());
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(identity_check(IdentityId::Pf1, 1).is_err());
        assert!(identity_check(IdentityId::PosA, 4).is_err());
        assert!(identity_check(IdentityId::Ibp2, 4).is_err());
    }
}
