//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the pass/fail lines always reach
//! stdout.

use std::process::{Command, ExitCode};
use std::time::Instant;

use harmonic_cert::arith::{gamma_cross_check, gamma_euler_maclaurin, ratio, Rational};
use harmonic_cert::harmonic::RamanujanCoefficients;
use harmonic_cert::lodge::{limit_scan, series_witness, BoundConstants, LimitQuantity};
use harmonic_cert::parse::parse_decimal;
use harmonic_cert::remainder::{
    alternating_truncation_scan, decomposition_check, epsilon, epsilon_step, identity_check,
    positivity_check, theta, IdentityId, Representation,
};
use harmonic_cert::report::rows_from_csv;
use harmonic_cert::{CertifiedReal, HarmonicIndex, PrecisionPolicy, Verdict};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn idx(n: u64) -> HarmonicIndex {
    HarmonicIndex::new(n).unwrap()
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_harmonic-cert"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        Err(bad.into())
    }
}

/// `lo < mid ± rad < hi` using the printed decimal strings only.
fn strictly_inside(mid: &str, rad: &str, lo: &Rational, hi: &Rational) -> bool {
    let (m, r) = (parse_decimal(mid).unwrap(), parse_decimal(rad).unwrap());
    &(&m - &r) > lo && &(&m + &r) < hi
}

fn theorem_certification() -> Outcome {
    let (code, out) = run(&["certify", "theorem", "--n-max", "10000", "--precision-bits", "256"]);
    let rows = rows_from_csv(&out).map_err(|e| e.to_string())?;
    let (zero, one) = (ratio(0, 1), ratio(1, 1));
    let inside = rows
        .iter()
        .filter(|r| r.verdict == Verdict::Pass && strictly_inside(&r.midpoint, &r.radius, &zero, &one))
        .count();
    check(
        code == 0 && rows.len() == 10_000 && inside == 10_000,
        "10000 Θ_n enclosures strictly inside (0,1), exit 0",
        format!("exit {code}, {} rows, {inside} strictly inside", rows.len()),
    )
}

/// ln 2 = Σ_{i≥1} 1/(i 2^i), tail after N terms below 2/((N+1) 2^(N+1)).
fn ln2_oracle(prec: u32) -> CertifiedReal {
    let terms = prec + 8;
    let mut s = Rational::zero();
    for i in 1..=terms {
        s += Rational::new(BigInt::one(), BigInt::from(i) * (BigInt::one() << i));
    }
    let tail = Rational::new(BigInt::from(2), BigInt::from(terms + 1) * (BigInt::one() << (terms + 1)));
    CertifiedReal::from_rational(&s, prec).add_error_rational(&tail)
}

fn theta_one_spot_value() -> Outcome {
    // oracle: independent γ (Euler–Maclaurin) and ln 2 (binary series)
    let eps1 = (&CertifiedReal::from_int(1, 200) - &ln2_oracle(200).mul_pow2(-1)) - gamma_euler_maclaurin();
    let four = RamanujanCoefficients::new().partial_sum(&ratio(1, 1), 4);
    let oracle = eps1.sub_rational(&four).mul_rational(&ratio(2310, 1));
    let lib = theta(idx(1), &PrecisionPolicy::default());
    let target = ratio(505_154, 1_000_000);
    let tol = ratio(1, 100_000);
    let near = |x: &CertifiedReal| x.sub_rational(&target).mag().to_rational() < tol;
    check(
        lib.verdict == Verdict::Pass && near(&lib.theta) && near(&oracle) && lib.theta.overlaps(&oracle),
        format!("Θ_1 = {:.12}, oracle agrees, |Θ_1 − 0.505154| < 1e-5", lib.theta),
        format!("library {:?}, oracle {:?}", lib.theta, oracle),
    )
}

fn alternating_truncation() -> Outcome {
    let checks = alternating_truncation_scan(idx(1), idx(1000), &PrecisionPolicy::default());
    let coeffs = RamanujanCoefficients::new();
    let bad: Vec<_> = checks
        .iter()
        .filter(|c| {
            let next_positive = coeffs.get(c.t + 1).is_positive();
            let sign_ok = if next_positive { c.residual.is_positive() } else { c.residual.is_negative() };
            let below = c.residual.mag().to_rational() < c.next_term.abs();
            c.verdict != Verdict::Pass || !sign_ok || !below
        })
        .map(|c| (c.n.get(), c.t))
        .collect();
    check(
        checks.len() == 5000 && bad.is_empty(),
        "n ∈ [1,1000], t ∈ 0..4: |residual| < |next term| with matching sign (5000 checks)",
        format!("{} checks, failures at {:?}", checks.len(), &bad[..bad.len().min(10)]),
    )
}

fn corollary_bounds() -> Outcome {
    let (code, out) = run(&["certify", "corollaries", "--n-max", "10000"]);
    let rows = rows_from_csv(&out).map_err(|e| e.to_string())?;
    let inside = rows
        .iter()
        .filter(|r| {
            let lo = harmonic_cert::parse::parse_rational(&r.bound_lo).unwrap();
            let hi = harmonic_cert::parse::parse_rational(&r.bound_hi).unwrap();
            r.verdict == Verdict::Pass && strictly_inside(&r.midpoint, &r.radius, &lo, &hi)
        })
        .count();
    check(
        code == 0 && rows.len() == 50_000 && inside == 50_000,
        "λ, ρ, Λ, δ, c bounds certified for n ∈ [1,10000], exit 0",
        format!("exit {code}, {} rows, {inside} strictly inside", rows.len()),
    )
}

fn best_possible_numeric() -> Outcome {
    let tol = ratio(1, 1000);
    let mut report = Vec::new();
    for q in [LimitQuantity::ScaledLambda, LimitQuantity::Delta, LimitQuantity::ScaledRho] {
        let (_, v) = limit_scan(q, &[idx(1000)], 128).map_err(|e| e.to_string())?.remove(0);
        let t = q.target();
        let rel = v.sub_rational(&t).mul_rational(&t.recip());
        let dev = rel.mag().to_rational();
        if dev >= tol {
            return Err(format!("{q}: relative deviation {rel:?}"));
        }
        report.push(format!("{q} {:.3e}", rel.mid_f64()));
    }
    Ok(format!("n = 1000 relative deviations: {}", report.join(", ")))
}

fn best_possible_exact() -> Outcome {
    let w = series_witness();
    let expected = [ratio(6, 5), ratio(-19, 175), ratio(13, 250), ratio(-187_969, 4_042_500)];
    check(
        w.lambda_constant() == &ratio(19, 25_200)
            && w.rho_constant() == ratio(43, 84_000)
            && w.capital_lambda_series == expected
            && w.reproduces(&BoundConstants::default()),
        "series composition gives 19/25200, 43/84000 and 6/5, −19/175, 13/250, −187969/4042500",
        format!("{w:?}"),
    )
}

fn identity_audit() -> Outcome {
    let (code, out) = run(&["identities", "--k-max", "1000"]);
    let lines = out.lines().count();
    let ku5 = identity_check(IdentityId::Ku5, 2).map_err(|e| e.to_string())?;
    let row = out.lines().any(|l| l == "KU5,2,-167/841995,-167/841995,pass");
    check(
        code == 0 && lines == 1 + 5 * 999 && ku5.lhs == ratio(-167, 841_995) && ku5.rhs == ku5.lhs && row,
        "PF1, PF2, KU3, KU4, KU5 exact for k ∈ [2,1000]; KU5(2) = −167/841995 on both sides",
        format!("exit {code}, {lines} lines, KU5(2) = {} vs {}", ku5.lhs, ku5.rhs),
    )
}

fn positivity_lemmas() -> Outcome {
    let a = positivity_check(IdentityId::PosA, idx(3), 10_000).map_err(|e| e.to_string())?;
    let b = positivity_check(IdentityId::PosB, idx(5), 10_000).map_err(|e| e.to_string())?;
    check(
        a.holds && a.checked == 9997 && b.holds && b.checked == 9996,
        "POS-A for k ∈ (3,10000], POS-B for n ∈ [5,10000], exact",
        format!("{a:?} {b:?}"),
    )
}

fn decomposition_overlap() -> Outcome {
    let width_limit = ratio(1, 10).pow(20);
    let mut worst = 0f64;
    for n in [1u64, 2, 5, 10, 50] {
        for stage in [Representation::Ibp1, Representation::Ibp2, Representation::Ibp3] {
            let o = decomposition_check(idx(n), stage, 256).map_err(|e| e.to_string())?;
            let width = o.value.width().to_rational();
            if !o.overlaps || width >= width_limit {
                return Err(format!("n = {n}, {stage}: overlaps {}, width {:e}", o.overlaps, o.value.rad_f64() * 2.0));
            }
            worst = worst.max(o.value.rad_f64() * 2.0);
        }
    }
    Ok(format!("IBP1-3 overlap ε_n for n ∈ {{1,2,5,10,50}}, widest enclosure {worst:.1e}"))
}

fn recurrence_closed_form() -> Outcome {
    let bad: Vec<u64> = (2..=1000u64)
        .filter(|&n| {
            let d = &epsilon(idx(n - 1), 128).enclosure - &epsilon(idx(n), 128).enclosure;
            !d.overlaps(&epsilon_step(n, 128).unwrap())
        })
        .collect();
    check(
        bad.is_empty(),
        "ε_{n−1} − ε_n overlaps ½ln((n+1)/(n−1)) − 1/n for n ∈ [2,1000]",
        format!("no overlap at {bad:?}"),
    )
}

fn gamma_integrity() -> Outcome {
    let g = gamma_cross_check().map_err(|e| e.to_string())?;
    check(
        g.agreeing_digits >= 50,
        format!("embedded γ and Euler–Maclaurin γ agree to {} digits", g.agreeing_digits),
        format!("only {} agreeing digits", g.agreeing_digits),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("theorem certification", theorem_certification),
        ("Θ_1 spot value", theta_one_spot_value),
        ("alternating truncation", alternating_truncation),
        ("corollary bounds", corollary_bounds),
        ("best-possible constants, numeric", best_possible_numeric),
        ("best-possible constants, exact", best_possible_exact),
        ("identity audit", identity_audit),
        ("positivity lemmas", positivity_lemmas),
        ("decomposition overlap", decomposition_overlap),
        ("recurrence closed form", recurrence_closed_form),
        ("γ integrity", gamma_integrity),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
