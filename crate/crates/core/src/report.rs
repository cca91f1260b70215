//! Machine-readable certification results with lossless CSV and JSON forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{CertifiedReal, PrecisionPolicy, Rational};
use crate::error::{Error, Result};

/// Significant digits printed for midpoints and radii.
pub const REPORT_DIGITS: u32 = 40;

pub const CSV_HEADER: [&str; 7] = ["n", "quantity", "midpoint", "radius", "bound_lo", "bound_hi", "verdict"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Unresolved,
}

impl From<Option<bool>> for Verdict {
    fn from(v: Option<bool>) -> Self {
        match v {
            Some(true) => Verdict::Pass,
            Some(false) => Verdict::Fail,
            None => Verdict::Unresolved,
        }
    }
}

impl From<bool> for Verdict {
    fn from(v: bool) -> Self {
        Some(v).into()
    }
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Unresolved => "unresolved",
        }
    }

    /// Pass iff every input passes; any fail beats unresolved.
    pub fn aggregate<I: IntoIterator<Item = Verdict>>(verdicts: I) -> Verdict {
        verdicts.into_iter().fold(Verdict::Pass, |acc, v| match (acc, v) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Unresolved, _) | (_, Verdict::Unresolved) => Verdict::Unresolved,
            _ => Verdict::Pass,
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pass" => Ok(Verdict::Pass),
            "fail" => Ok(Verdict::Fail),
            "unresolved" => Ok(Verdict::Unresolved),
            _ => Err(Error::Parse(format!("unknown verdict {s:?}"))),
        }
    }
}

/// One certified claim `bound_lo < quantity < bound_hi` at index `n`.
///
/// Midpoint and radius are decimal strings (the radius rounded up so the
/// printed ball still encloses the value); bounds are exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: u64,
    pub quantity: String,
    pub midpoint: String,
    pub radius: String,
    pub bound_lo: String,
    pub bound_hi: String,
    pub verdict: Verdict,
}

impl ReportRow {
    pub fn new(
        n: u64,
        quantity: &str,
        value: &CertifiedReal,
        bound_lo: &Rational,
        bound_hi: &Rational,
        verdict: Verdict,
    ) -> Self {
        let (midpoint, radius) = value.to_decimal_strings(REPORT_DIGITS);
        ReportRow {
            n,
            quantity: quantity.to_owned(),
            midpoint,
            radius,
            bound_lo: bound_lo.to_string(),
            bound_hi: bound_hi.to_string(),
            verdict,
        }
    }

    fn sort_key(&self) -> (u64, &str) {
        (self.n, &self.quantity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportMeta {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub policy: PrecisionPolicy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    pub meta: ReportMeta,
    pub rows: Vec<ReportRow>,
    pub aggregate: Verdict,
}

impl CertificationReport {
    /// Sorts rows by `(n, quantity)` and derives the aggregate verdict.
    pub fn new(meta: ReportMeta, mut rows: Vec<ReportRow>) -> Self {
        rows.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        let aggregate = Verdict::aggregate(rows.iter().map(|r| r.verdict));
        CertificationReport { meta, rows, aggregate }
    }

    pub fn to_csv(&self) -> Result<String> {
        rows_to_csv(&self.rows)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self).map_err(|e| Error::Report(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    /// Decodes a JSON report and rejects an aggregate that disagrees with
    /// its rows.
    pub fn from_json(s: &str) -> Result<Self> {
        let r: CertificationReport = serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))?;
        let expected = Verdict::aggregate(r.rows.iter().map(|row| row.verdict));
        if r.aggregate != expected {
            return Err(Error::Report(format!(
                "aggregate {} disagrees with rows ({expected})",
                r.aggregate
            )));
        }
        Ok(r)
    }
}

pub fn rows_to_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(CSV_HEADER).map_err(|e| Error::Report(e.to_string()))?;
    for row in rows {
        w.serialize(row).map_err(|e| Error::Report(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Report(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Report(e.to_string()))
}

/// Decodes the row table written by [`CertificationReport::to_csv`].
pub fn rows_from_csv(s: &str) -> Result<Vec<ReportRow>> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let header = r.headers().map_err(|e| Error::Report(e.to_string()))?;
    if header.iter().ne(CSV_HEADER) {
        return Err(Error::Report(format!("unexpected header {header:?}")));
    }
    r.deserialize().map(|row| row.map_err(|e| Error::Report(e.to_string()))).collect()
}
