use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::epsilon::epsilon;
use super::integral::tail_integral_sum;
use super::tail::{tail_rational_sum, TailSpec};
use crate::arith::{int, ratio, CertifiedReal, Rational};
use crate::error::{Error, Result};
use crate::harmonic::{HarmonicIndex, RamanujanCoefficients};

const GUARD_BITS: u32 = 16;

/// Successive rewritings of `ε_n`, with `T(p; a, b) = Σ_{k>n} p(k)/(k^a (k²−1)^b)`
/// and `J_p = Σ_{k>n} ∫₀¹ t^{2p}/(k(k²−t²)^p) dt`:
///
/// ```text
/// IBP1     (1/3) T(1; 1,1) − (2/3) J_2
/// IBP2     1/12m − 1/120m² + (8/15) J_3
/// IBP3     1/12m − 1/120m² + (8/105) T(1; 1,3) − (16/35) J_4
/// Kummer3  1/12m − 1/120m² + 1/630m³ − (8/315) T(1; 3,3) − (16/35) J_4
/// Kummer4  … − 1/1680m⁴ + (32/315) T(1; 3,4) + (128/315) J_5
/// Kummer5  … + 1/2310m⁵ − (32/3465) T(41k²+3; 5,5) − (256/9009) T(1; 1,6) + (1024/3003) J_7
/// ```
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Representation {
    #[serde(rename = "IBP1")]
    Ibp1,
    #[serde(rename = "IBP2")]
    Ibp2,
    #[serde(rename = "IBP3")]
    Ibp3,
    #[serde(rename = "KUMMER3")]
    Kummer3,
    #[serde(rename = "KUMMER4")]
    Kummer4,
    #[serde(rename = "KUMMER5")]
    Kummer5,
}

impl Representation {
    pub const ALL: [Representation; 6] = [
        Representation::Ibp1,
        Representation::Ibp2,
        Representation::Ibp3,
        Representation::Kummer3,
        Representation::Kummer4,
        Representation::Kummer5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Representation::Ibp1 => "IBP1",
            Representation::Ibp2 => "IBP2",
            Representation::Ibp3 => "IBP3",
            Representation::Kummer3 => "KUMMER3",
            Representation::Kummer4 => "KUMMER4",
            Representation::Kummer5 => "KUMMER5",
        }
    }

    /// Number of leading Ramanujan terms split off in closed form.
    fn leading_terms(self) -> usize {
        match self {
            Representation::Ibp1 => 0,
            Representation::Ibp2 | Representation::Ibp3 => 2,
            Representation::Kummer3 => 3,
            Representation::Kummer4 => 4,
            Representation::Kummer5 => 5,
        }
    }

    /// `(coefficient, numerator, a, b)` of each tail series.
    fn tails(self) -> Vec<(Rational, Vec<Rational>, u32, u32)> {
        let one = || vec![int(1)];
        match self {
            Representation::Ibp1 => vec![(ratio(1, 3), one(), 1, 1)],
            Representation::Ibp2 => vec![],
            Representation::Ibp3 => vec![(ratio(8, 105), one(), 1, 3)],
            Representation::Kummer3 => vec![(ratio(-8, 315), one(), 3, 3)],
            Representation::Kummer4 => vec![(ratio(32, 315), one(), 3, 4)],
            Representation::Kummer5 => vec![
                (ratio(-32, 3465), vec![int(3), int(0), int(41)], 5, 5),
                (ratio(-256, 9009), one(), 1, 6),
            ],
        }
    }

    /// `(coefficient, p)` of the remaining integral series.
    fn integral(self) -> (Rational, u32) {
        match self {
            Representation::Ibp1 => (ratio(-2, 3), 2),
            Representation::Ibp2 => (ratio(8, 15), 3),
            Representation::Ibp3 | Representation::Kummer3 => (ratio(-16, 35), 4),
            Representation::Kummer4 => (ratio(128, 315), 5),
            Representation::Kummer5 => (ratio(1024, 3003), 7),
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Representation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Representation::ALL
            .into_iter()
            .find(|r| r.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown representation {s:?}")))
    }
}

/// Evaluates the right-hand side of `r` at `n`, built from certified tail
/// series and tail integrals only (no logarithm, no γ).
pub fn representation(n: HarmonicIndex, r: Representation, prec: u32) -> Result<CertifiedReal> {
    let wp = prec + GUARD_BITS;
    let m = n.m().as_rational();
    let closed = RamanujanCoefficients::new().partial_sum(&m, r.leading_terms());
    let mut sum = CertifiedReal::from_rational(&closed, wp);
    for (c, numerator, a, b) in r.tails() {
        let spec = TailSpec::new(numerator, a, b)?;
        sum = &sum + &tail_rational_sum(n, &spec, wp).mul_rational(&c);
    }
    let (c, p) = r.integral();
    sum = &sum + &tail_integral_sum(n, p, wp)?.mul_rational(&c);
    Ok(sum.with_precision(prec))
}

#[derive(Clone, Debug)]
pub struct DecompositionOutcome {
    pub n: HarmonicIndex,
    pub stage: Representation,
    pub value: CertifiedReal,
    pub epsilon: CertifiedReal,
    pub overlaps: bool,
}

/// Whether the representation `stage` overlaps the direct enclosure of `ε_n`.
pub fn decomposition_check(n: HarmonicIndex, stage: Representation, prec: u32) -> Result<DecompositionOutcome> {
    let value = representation(n, stage, prec)?;
    let eps = epsilon(n, prec).enclosure;
    let overlaps = value.overlaps(&eps);
    Ok(DecompositionOutcome { n, stage, value, epsilon: eps, overlaps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_stage_overlaps_at_five() {
        let n = HarmonicIndex::new(5).unwrap();
        for r in Representation::ALL {
            let o = decomposition_check(n, r, 128).unwrap();
            assert!(o.overlaps, "{r}");
            assert!(o.value.rad_f64() < 1e-30, "{r}");
        }
    }

    #[test]
    fn ibp2_at_ten() {
        // (8/15) J_3 = ε_10 − 1/12m + 1/120m², m = 55
        let n = HarmonicIndex::new(10).unwrap();
        let j3 = tail_integral_sum(n, 3, 128).unwrap().mul_rational(&ratio(8, 15));
        let rhs = epsilon(n, 128).enclosure.sub_rational(&ratio(1, 660)).add_rational(&ratio(1, 363_000));
        assert!(j3.overlaps(&rhs));
    }

    #[test]
    fn names_round_trip() {
        for r in Representation::ALL {
            assert_eq!(r.to_string().parse::<Representation>().unwrap(), r);
        }
    }
}
