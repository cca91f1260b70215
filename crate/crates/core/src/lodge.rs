//! Lodge's corrected approximations and Cesàro's form:
//!
//! ```text
//! H_n = ½ ln(2m) + γ + 1/(12m + 6/5) + λ_n,        0 < λ_n < 19/25200m³
//! λ_n = 19/25200m³ − ρ_n,                          0 < ρ_n < 43/84000m⁴
//! H_n = ½ ln(2m) + γ + 1/(12m + Λ_n),
//! Λ_n = 6/5 − 19/175m + 13/250m² − δ_n/m³,         0 < δ_n < 187969/4042500
//! H_n = ½ ln(2m) + γ + c_n/12m,                    0 < c_n < 1
//! ```
//!
//! Bromwich gives the δ bound as 1/150 in one edition; that value is wrong and
//! is not used here.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{int, ratio, CertifiedReal, PrecisionPolicy, Rational};
use crate::error::{Error, Result};
use crate::harmonic::{harmonic_cache, HarmonicIndex, HarmonicState, RamanujanCoefficients};
use crate::remainder::{epsilon_from_state, scan_states};
use crate::report::{CertificationReport, ReportMeta, ReportRow, Verdict};
use crate::series::PowerSeries;

/// Upper bounds for λ, ρ and δ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundConstants {
    pub lambda_upper: Rational,
    pub rho_upper: Rational,
    pub delta_upper: Rational,
}

impl Default for BoundConstants {
    fn default() -> Self {
        BoundConstants {
            lambda_upper: ratio(19, 25_200),
            rho_upper: ratio(43, 84_000),
            delta_upper: ratio(187_969, 4_042_500),
        }
    }
}

/// `6/5 − 19/175m + 13/250m²`
fn capital_lambda_head(m: &Rational) -> Rational {
    ratio(6, 5) - ratio(19, 175) / m + ratio(13, 250) / (m * m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LodgeQuantity {
    Lambda,
    Rho,
    CapitalLambda,
    Delta,
    CesaroC,
}

impl LodgeQuantity {
    pub const ALL: [LodgeQuantity; 5] = [
        LodgeQuantity::Lambda,
        LodgeQuantity::Rho,
        LodgeQuantity::CapitalLambda,
        LodgeQuantity::Delta,
        LodgeQuantity::CesaroC,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LodgeQuantity::Lambda => "lambda",
            LodgeQuantity::Rho => "rho",
            LodgeQuantity::CapitalLambda => "capital_lambda",
            LodgeQuantity::Delta => "delta",
            LodgeQuantity::CesaroC => "cesaro_c",
        }
    }
}

impl fmt::Display for LodgeQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One strict two-sided bound `lo < value < hi`.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub quantity: LodgeQuantity,
    pub value: CertifiedReal,
    pub lo: Rational,
    pub hi: Rational,
    pub verdict: Verdict,
}

fn interval_verdict(x: &CertifiedReal, lo: &Rational, hi: &Rational) -> Verdict {
    let above = x.sub_rational(lo);
    let below = x.sub_rational(hi);
    if above.is_negative() || below.is_positive() {
        Verdict::Fail
    } else if above.is_positive() && below.is_negative() {
        Verdict::Pass
    } else {
        Verdict::Unresolved
    }
}

#[derive(Clone, Debug)]
pub struct LodgeQuantities {
    pub n: HarmonicIndex,
    pub lambda: CertifiedReal,
    pub rho: CertifiedReal,
    pub capital_lambda: CertifiedReal,
    pub delta: CertifiedReal,
    pub cesaro_c: CertifiedReal,
    /// Precision of `ε_n` these were derived from.
    pub bits: u32,
}

impl LodgeQuantities {
    /// All five quantities from one enclosure of `ε_n`.
    pub fn from_epsilon(n: HarmonicIndex, eps: &CertifiedReal, bits: u32) -> Result<Self> {
        let m = n.m().as_rational();
        let m3 = n.m().pow(3);
        let lambda = eps.sub_rational(&(&m * int(12) + ratio(6, 5)).recip());
        let rho = -lambda.sub_rational(&(ratio(19, 25_200) / &m3));
        let capital_lambda = eps.recip()?.sub_rational(&(&m * int(12)));
        let delta = (-capital_lambda.sub_rational(&capital_lambda_head(&m))).mul_rational(&m3);
        let cesaro_c = eps.mul_rational(&(&m * int(12)));
        Ok(LodgeQuantities { n, lambda, rho, capital_lambda, delta, cesaro_c, bits })
    }

    pub fn get(&self, q: LodgeQuantity) -> &CertifiedReal {
        match q {
            LodgeQuantity::Lambda => &self.lambda,
            LodgeQuantity::Rho => &self.rho,
            LodgeQuantity::CapitalLambda => &self.capital_lambda,
            LodgeQuantity::Delta => &self.delta,
            LodgeQuantity::CesaroC => &self.cesaro_c,
        }
    }

    /// The strict bound claimed for each quantity. For `Λ_n` it is the
    /// bracket equivalent to `0 < δ_n < 187969/4042500`.
    pub fn bounds(&self) -> Vec<BoundCheck> {
        let k = BoundConstants::default();
        let m = self.n.m().as_rational();
        let zero = ratio(0, 1);
        let head = capital_lambda_head(&m);
        LodgeQuantity::ALL
            .into_iter()
            .map(|q| {
                let (lo, hi) = match q {
                    LodgeQuantity::Lambda => (zero.clone(), &k.lambda_upper / self.n.m().pow(3)),
                    LodgeQuantity::Rho => (zero.clone(), &k.rho_upper / self.n.m().pow(4)),
                    LodgeQuantity::CapitalLambda => {
                        (&head - &k.delta_upper / self.n.m().pow(3), head.clone())
                    }
                    LodgeQuantity::Delta => (zero.clone(), k.delta_upper.clone()),
                    LodgeQuantity::CesaroC => (zero.clone(), ratio(1, 1)),
                };
                let value = self.get(q).clone();
                let verdict = interval_verdict(&value, &lo, &hi);
                BoundCheck { quantity: q, value, lo, hi, verdict }
            })
            .collect()
    }
}

fn quantities_from_state(n: HarmonicIndex, state: &HarmonicState, policy: &PrecisionPolicy) -> LodgeQuantities {
    let mut last = None;
    for bits in policy.levels() {
        let eps = epsilon_from_state(n, state, bits);
        let Ok(q) = LodgeQuantities::from_epsilon(n, &eps, bits) else { continue };
        let resolved = q.bounds().iter().all(|b| b.verdict != Verdict::Unresolved);
        last = Some(q);
        if resolved {
            break;
        }
    }
    last.expect("ε_n is bounded away from zero at every precision")
}

/// The five quantities, escalating precision until every bound check is
/// decided or the policy is exhausted.
pub fn lodge_quantities(n: HarmonicIndex, policy: &PrecisionPolicy) -> LodgeQuantities {
    quantities_from_state(n, &harmonic_cache().state(n.get()), policy)
}

/// Report rows for every `n` in `lo..=hi`.
pub fn corollary_rows(lo: HarmonicIndex, hi: HarmonicIndex, policy: &PrecisionPolicy) -> Result<Vec<ReportRow>> {
    if lo > hi {
        return Err(Error::Usage(format!("empty index range {}..={}", lo.get(), hi.get())));
    }
    let rows = scan_states(lo, hi, |n, state| {
        quantities_from_state(n, state, policy)
            .bounds()
            .into_iter()
            .map(|b| ReportRow::new(n.get(), b.quantity.as_str(), &b.value, &b.lo, &b.hi, b.verdict))
            .collect::<Vec<_>>()
    });
    Ok(rows.into_iter().flatten().collect())
}

pub fn certify_corollaries(
    lo: HarmonicIndex,
    hi: HarmonicIndex,
    policy: &PrecisionPolicy,
) -> Result<CertificationReport> {
    let rows = corollary_rows(lo, hi, policy)?;
    let meta = ReportMeta {
        command: "certify corollaries".into(),
        parameters: BTreeMap::from([
            ("n_min".to_owned(), lo.get().to_string()),
            ("n_max".to_owned(), hi.get().to_string()),
        ]),
        policy: *policy,
    };
    Ok(CertificationReport::new(meta, rows))
}

/// Sequences whose limits are the best-possible constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LimitQuantity {
    /// `m³ λ_n → 19/25200`
    ScaledLambda,
    /// `m⁴ ρ_n → 43/84000`
    ScaledRho,
    /// `δ_n → 187969/4042500`
    Delta,
    /// `c_n → 1`
    CesaroC,
}

impl LimitQuantity {
    pub const ALL: [LimitQuantity; 4] =
        [LimitQuantity::ScaledLambda, LimitQuantity::ScaledRho, LimitQuantity::Delta, LimitQuantity::CesaroC];

    pub fn as_str(self) -> &'static str {
        match self {
            LimitQuantity::ScaledLambda => "scaled_lambda",
            LimitQuantity::ScaledRho => "scaled_rho",
            LimitQuantity::Delta => "delta",
            LimitQuantity::CesaroC => "cesaro_c",
        }
    }

    pub fn target(self) -> Rational {
        let k = BoundConstants::default();
        match self {
            LimitQuantity::ScaledLambda => k.lambda_upper,
            LimitQuantity::ScaledRho => k.rho_upper,
            LimitQuantity::Delta => k.delta_upper,
            LimitQuantity::CesaroC => ratio(1, 1),
        }
    }
}

impl fmt::Display for LimitQuantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LimitQuantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LimitQuantity::ALL
            .into_iter()
            .find(|q| q.as_str() == s)
            .ok_or_else(|| Error::Usage(format!("unknown limit quantity {s:?}")))
    }
}

/// The scaled sequence at each `n` of a strictly increasing list.
///
/// `ε_n` is evaluated with enough extra bits (about `6 log₂ m`) that the
/// scaled values keep roughly `prec` bits despite the cancellation in `ρ_n`
/// and `δ_n`.
pub fn limit_scan(q: LimitQuantity, ns: &[HarmonicIndex], prec: u32) -> Result<Vec<(HarmonicIndex, CertifiedReal)>> {
    if ns.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Usage("index list must be strictly increasing".into()));
    }
    ns.iter()
        .map(|&n| {
            let m_bits = 64 - n.m().get().leading_zeros();
            let wp = prec + 6 * m_bits + 32;
            let eps = epsilon_from_state(n, &harmonic_cache().state(n.get()), wp);
            let lq = LodgeQuantities::from_epsilon(n, &eps, wp)?;
            let v = match q {
                LimitQuantity::ScaledLambda => lq.lambda.mul_rational(&n.m().pow(3)),
                LimitQuantity::ScaledRho => lq.rho.mul_rational(&n.m().pow(4)),
                LimitQuantity::Delta => lq.delta,
                LimitQuantity::CesaroC => lq.cesaro_c,
            };
            Ok((n, v.with_precision(prec)))
        })
        .collect()
}

/// Exact coefficients obtained from the five-term expansion of `ε` in
/// `x = 1/m` by formal power-series arithmetic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesWitness {
    /// `ε − 1/(12/x + 6/5)` through `x⁴`; the first two vanish.
    pub lambda_series: [Rational; 4],
    /// `1/ε − 12/x` through `x³`.
    pub capital_lambda_series: [Rational; 4],
}

impl SeriesWitness {
    /// Coefficient of `x³` in the λ series.
    pub fn lambda_constant(&self) -> &Rational {
        &self.lambda_series[2]
    }

    /// Coefficient of `x⁴` in `19/25200 x³ − λ`.
    pub fn rho_constant(&self) -> Rational {
        -self.lambda_series[3].clone()
    }

    /// Minus the coefficient of `x³` in the Λ series.
    pub fn delta_constant(&self) -> Rational {
        -self.capital_lambda_series[3].clone()
    }

    /// Whether the derived constants equal the stated bound constants.
    pub fn reproduces(&self, k: &BoundConstants) -> bool {
        self.lambda_series[0] == ratio(0, 1)
            && self.lambda_series[1] == ratio(0, 1)
            && self.lambda_constant() == &k.lambda_upper
            && self.rho_constant() == k.rho_upper
            && self.capital_lambda_series[..3] == [ratio(6, 5), ratio(-19, 175), ratio(13, 250)]
            && self.delta_constant() == k.delta_upper
    }
}

pub fn series_witness() -> SeriesWitness {
    // ε/x = Σ_j c_j x^(j−1), known through x⁴
    let order = 5;
    let f = PowerSeries::new(RamanujanCoefficients::new().as_slice().to_vec(), order);

    // x/(12 + 6x/5) divided by x
    let lodge = PowerSeries::new(vec![int(12), ratio(6, 5)], order).recip().expect("nonzero constant");
    let lambda = f.sub(&lodge);
    let lambda_series = [lambda.coeff(0), lambda.coeff(1), lambda.coeff(2), lambda.coeff(3)];

    // 1/ε − 12/x = (x/ε − 12)/x
    let g = f.recip().expect("nonzero constant");
    let capital_lambda_series = [g.coeff(1), g.coeff(2), g.coeff(3), g.coeff(4)];
    SeriesWitness { lambda_series, capital_lambda_series }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(n: u64) -> HarmonicIndex {
        HarmonicIndex::new(n).unwrap()
    }

    #[test]
    fn constants() {
        let k = BoundConstants::default();
        assert!(k.lambda_upper < ratio(1, 1000));
        assert!(k.delta_upper < ratio(1, 20));
    }

    #[test]
    fn witness_reproduces_constants() {
        let w = series_witness();
        assert_eq!(w.lambda_constant(), &ratio(19, 25_200));
        assert_eq!(w.rho_constant(), ratio(43, 84_000));
        assert_eq!(
            w.capital_lambda_series,
            [ratio(6, 5), ratio(-19, 175), ratio(13, 250), ratio(-187_969, 4_042_500)]
        );
        assert!(w.reproduces(&BoundConstants::default()));
    }

    #[test]
    fn values_at_one() {
        let q = lodge_quantities(idx(1), &PrecisionPolicy::default());
        assert!((q.lambda.mid_f64() - 0.000_453_17).abs() < 1e-8);
        assert!((q.rho.mid_f64() - 0.000_300_80).abs() < 1e-8);
        assert!((q.capital_lambda.mid_f64() - 1.121_509).abs() < 1e-6);
        assert!((q.delta.mid_f64() - 0.021_92).abs() < 1e-5);
        assert!((q.cesaro_c.mid_f64() - 0.914_529).abs() < 1e-6);
        assert!(q.bounds().iter().all(|b| b.verdict == Verdict::Pass));
    }

    #[test]
    fn definitional_consistency() {
        let n = idx(10);
        let q = lodge_quantities(n, &PrecisionPolicy::default());
        let eps = crate::remainder::epsilon(n, 256).enclosure;
        let m = n.m().as_rational();
        let inv = q.capital_lambda.add_rational(&(&m * int(12))).recip().unwrap();
        assert!(inv.overlaps(&eps));
        let sum = &q.rho + &q.lambda;
        assert!(sum.contains_rational(&(ratio(19, 25_200) / n.m().pow(3))));
    }

    #[test]
    fn small_range_passes() {
        let r = certify_corollaries(idx(1), idx(30), &PrecisionPolicy::default()).unwrap();
        assert_eq!(r.rows.len(), 150);
        assert_eq!(r.aggregate, Verdict::Pass);
        assert!(certify_corollaries(idx(3), idx(2), &PrecisionPolicy::default()).is_err());
    }

    #[test]
    fn limits_at_thousand() {
        let ns = [idx(1000)];
        for q in LimitQuantity::ALL {
            let (_, v) = &limit_scan(q, &ns, 128).unwrap()[0];
            let t = q.target();
            let rel = v.sub_rational(&t).mul_rational(&t.recip());
            assert!(rel.mid_f64().abs() < 1e-3, "{q}: {}", rel.mid_f64());
        }
        assert!(limit_scan(LimitQuantity::Delta, &[idx(5), idx(5)], 64).is_err());
    }
}
