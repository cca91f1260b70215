use std::collections::BTreeMap;

use harmonic_cert::arith::{gamma_cross_check, ratio, Rational};
use harmonic_cert::harmonic::{harmonic_exact, ramanujan_approx, RamanujanCoefficients};
use harmonic_cert::lodge::{corollary_rows, limit_scan, LimitQuantity};
use harmonic_cert::parse::parse_n_list;
use harmonic_cert::remainder::{alternating_truncation_check, identity_check, theta, theta_scan, IdentityId};
use harmonic_cert::report::{ReportMeta, REPORT_DIGITS};
use harmonic_cert::{CertificationReport, CertifiedReal, HarmonicIndex, PrecisionPolicy, ReportRow, Verdict};
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{CertifyArgs, Format, IdentitiesArgs, LimitsArgs, Subject, TableArgs};
use crate::output::{emit, render_rows};
use crate::Failure;

/// Digits of γ on which the embedded value and the independent computation
/// must agree before anything is certified.
const GAMMA_AGREEMENT_DIGITS: u32 = 50;

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect()
}

fn finish(command: &str, rows: usize, aggregate: Verdict) -> Result<(), Failure> {
    eprintln!("{command}: {rows} rows, aggregate {aggregate}");
    if aggregate == Verdict::Pass {
        Ok(())
    } else {
        Err(Failure::Certification(format!("{command}: certification did not pass")))
    }
}

fn decimal(x: &CertifiedReal) -> (String, String) {
    x.to_decimal_strings(REPORT_DIGITS)
}

fn rational_decimal(q: &Rational) -> String {
    decimal(&CertifiedReal::from_rational(q, 256)).0
}

fn sign(x: &CertifiedReal) -> &'static str {
    if x.is_positive() {
        "+"
    } else if x.is_negative() {
        "-"
    } else {
        "?"
    }
}

pub fn certify(a: &CertifyArgs) -> Result<(), Failure> {
    if a.n_max == 0 {
        return Err(Failure::Usage("--n-max must be at least 1".into()));
    }
    let hi = HarmonicIndex::new(a.n_max)?;
    let lo = HarmonicIndex::new(1)?;
    let policy = PrecisionPolicy::starting_at(a.precision_bits)?;

    let g = gamma_cross_check().map_err(|e| Failure::Certification(e.to_string()))?;
    if g.agreeing_digits < GAMMA_AGREEMENT_DIGITS {
        return Err(Failure::Certification(format!(
            "γ cross-check agrees to only {} digits",
            g.agreeing_digits
        )));
    }

    let mut rows = Vec::new();
    if matches!(a.subject, Subject::Theorem | Subject::All) {
        let (zero, one) = (ratio(0, 1), ratio(1, 1));
        rows.extend(
            theta_scan(lo, hi, &policy)
                .into_iter()
                .map(|c| ReportRow::new(c.n.get(), "theta", &c.theta, &zero, &one, c.verdict)),
        );
    }
    if matches!(a.subject, Subject::Corollaries | Subject::All) {
        rows.extend(corollary_rows(lo, hi, &policy)?);
    }

    let subject = match a.subject {
        Subject::Theorem => "theorem",
        Subject::Corollaries => "corollaries",
        Subject::All => "all",
    };
    let meta = ReportMeta {
        command: format!("certify {subject}"),
        parameters: params([
            ("n_max", a.n_max.to_string()),
            ("gamma_agreeing_digits", g.agreeing_digits.to_string()),
        ]),
        policy,
    };
    let report = CertificationReport::new(meta, rows);
    let text = match a.output.format {
        Format::Csv => report.to_csv()?,
        Format::Json => report.to_json()?,
    };
    emit(&a.output, &text)?;
    finish(&report.meta.command, report.rows.len(), report.aggregate)
}

#[derive(Serialize)]
struct TableRow {
    n: u64,
    m: u64,
    h_n: String,
    approx: String,
    residual: String,
    residual_radius: String,
    next_term_bound: String,
    sign: &'static str,
    verdict: Verdict,
}

fn table_row(n: HarmonicIndex, t: usize, prec: u32, policy: &PrecisionPolicy) -> Result<TableRow, Failure> {
    let approx = ramanujan_approx(n, t, prec)?;
    let m = n.m().as_rational();
    let (residual, bound, verdict) = if t < 5 {
        let c = alternating_truncation_check(n, t, policy)?;
        (c.residual, c.next_term.abs(), c.verdict)
    } else {
        // H_n − approx = (Θ_n − 1)/2310m⁵
        let c = theta(n, policy);
        let bound = RamanujanCoefficients::new().term(&m, 5);
        (c.theta.sub_rational(&ratio(1, 1)).mul_rational(&bound), bound, c.verdict)
    };
    let (res_mid, res_rad) = decimal(&residual);
    Ok(TableRow {
        n: n.get(),
        m: n.m().get(),
        h_n: harmonic_exact(n).to_string(),
        approx: decimal(&approx).0,
        residual: res_mid,
        residual_radius: res_rad,
        next_term_bound: rational_decimal(&bound),
        sign: sign(&residual),
        verdict,
    })
}

pub fn table(a: &TableArgs) -> Result<(), Failure> {
    let ns = parse_n_list(&a.n_list)?;
    if a.terms > 5 {
        return Err(Failure::Usage(format!("--terms must be in 0..=5, got {}", a.terms)));
    }
    let policy = PrecisionPolicy::starting_at(a.precision_bits)?;
    let rows = ns
        .par_iter()
        .map(|&n| table_row(n, a.terms, a.precision_bits, &policy))
        .collect::<Result<Vec<_>, _>>()?;
    let aggregate = Verdict::aggregate(rows.iter().map(|r| r.verdict));
    let parameters = params([
        ("n_list", a.n_list.clone()),
        ("terms", a.terms.to_string()),
        ("precision_bits", a.precision_bits.to_string()),
    ]);
    emit(&a.output, &render_rows(a.output.format, "table", &parameters, &rows, aggregate)?)?;
    finish("table", rows.len(), aggregate)
}

#[derive(Serialize)]
struct IdentityRow {
    id: IdentityId,
    k: u64,
    lhs: String,
    rhs: String,
    verdict: Verdict,
}

pub fn identities(a: &IdentitiesArgs) -> Result<(), Failure> {
    if a.k_max < 2 {
        return Err(Failure::Usage(format!("--k-max must be at least 2, got {}", a.k_max)));
    }
    let mut rows = Vec::new();
    for id in IdentityId::EXACT {
        let outcomes = (2..=a.k_max)
            .into_par_iter()
            .map(|k| identity_check(id, k))
            .collect::<Result<Vec<_>, _>>()?;
        rows.extend(outcomes.into_iter().map(|o| IdentityRow {
            id: o.id,
            k: o.k,
            lhs: o.lhs.to_string(),
            rhs: o.rhs.to_string(),
            verdict: o.holds.into(),
        }));
    }
    let aggregate = Verdict::aggregate(rows.iter().map(|r| r.verdict));
    let parameters = params([("k_max", a.k_max.to_string())]);
    emit(&a.output, &render_rows(a.output.format, "identities", &parameters, &rows, aggregate)?)?;
    finish("identities", rows.len(), aggregate)
}

#[derive(Serialize)]
struct LimitRow {
    n: u64,
    quantity: LimitQuantity,
    value: String,
    radius: String,
    target: String,
    relative_deviation: String,
}

pub fn limits(a: &LimitsArgs) -> Result<(), Failure> {
    let q: LimitQuantity = a.quantity.parse()?;
    let ns = parse_n_list(&a.n_list)?;
    let target = q.target();
    let scan = limit_scan(q, &ns, a.precision_bits)?;

    let mids: Vec<f64> = scan.iter().map(|(_, v)| v.mid_f64()).collect();
    if matches!(q, LimitQuantity::ScaledLambda | LimitQuantity::Delta) && mids.windows(2).any(|w| w[0] >= w[1]) {
        eprintln!("warning: {q} is not increasing over the given indices");
    }

    let rows: Vec<LimitRow> = scan
        .iter()
        .map(|(n, v)| {
            let (value, radius) = decimal(v);
            let dev = v.sub_rational(&target).mul_rational(&target.recip());
            LimitRow {
                n: n.get(),
                quantity: q,
                value,
                radius,
                target: target.to_string(),
                relative_deviation: dev.to_decimal_strings(6).0,
            }
        })
        .collect();
    let parameters = params([
        ("quantity", q.to_string()),
        ("n_list", a.n_list.clone()),
        ("precision_bits", a.precision_bits.to_string()),
    ]);
    emit(&a.output, &render_rows(a.output.format, "limits", &parameters, &rows, Verdict::Pass)?)?;
    eprintln!("limits: {} rows toward {}", rows.len(), rational_decimal(&target));
    Ok(())
}
