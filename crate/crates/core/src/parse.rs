//! Text decoders for command-line lists and report fields.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::harmonic::HarmonicIndex;

/// Longest accepted input for a single number, in bytes.
const MAX_NUMBER_LEN: usize = 4096;
/// Decimal exponents beyond this are rejected rather than expanded.
const MAX_EXPONENT: i64 = 100_000;

/// `"1,2,5"` → indices, in the order given. Whitespace around entries is
/// ignored; empty entries are not.
pub fn parse_n_list(s: &str) -> Result<Vec<HarmonicIndex>> {
    if s.trim().is_empty() {
        return Err(Error::Parse("empty index list".into()));
    }
    s.split(',')
        .map(|item| {
            let item = item.trim();
            let v: u64 = item.parse().map_err(|_| Error::Parse(format!("bad index {item:?}")))?;
            HarmonicIndex::new(v)
        })
        .collect()
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad integer {s:?}")));
    }
    s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}")))
}

/// `"p/q"` or `"p"`, with a nonzero `q`. The result is canonical.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.len() > MAX_NUMBER_LEN {
        return Err(Error::Parse("number too long".into()));
    }
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s)?)),
        Some((p, q)) => {
            let (p, q) = (parse_integer(p)?, parse_integer(q)?);
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Exact value of a decimal such as `-3.25`, `1e-7` or `4.000e+02`.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.len() > MAX_NUMBER_LEN {
        return Err(Error::Parse("number too long".into()));
    }
    let bad = || Error::Parse(format!("bad decimal {s:?}"));
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let e = e.strip_prefix('+').unwrap_or(e);
            let e: i64 = e.parse().map_err(|_| bad())?;
            (m, e)
        }
        None => (s, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let scale = exp - frac_part.len() as i64;
    if scale.abs() > MAX_EXPONENT {
        return Err(Error::Parse(format!("exponent out of range in {s:?}")));
    }
    let digits: BigInt = format!("0{int_part}{frac_part}").parse().map_err(|_| bad())?;
    let mut q = Rational::from_integer(digits) * Rational::from_integer(BigInt::from(10)).pow(scale as i32);
    if neg {
        q = -q;
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn index_lists() {
        let v: Vec<u64> = parse_n_list("1, 2,5").unwrap().into_iter().map(|n| n.get()).collect();
        assert_eq!(v, vec![1, 2, 5]);
        for bad in ["", "1,,2", "0", "-3", "1;2", "x"] {
            assert!(parse_n_list(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("5344/26943840").unwrap(), ratio(167, 841_995));
        assert_eq!(parse_rational("-7").unwrap(), ratio(-7, 1));
        assert_eq!(parse_rational("3/-6").unwrap(), ratio(-1, 2));
        assert!(matches!(parse_rational("1/0"), Err(Error::DivisionByZero)));
        for bad in ["", "/", "1/", "1/2/3", "+-1", "1.5/2"] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal("-3.25").unwrap(), ratio(-13, 4));
        assert_eq!(parse_decimal("1e-7").unwrap(), ratio(1, 10_000_000));
        assert_eq!(parse_decimal("4.000e+02").unwrap(), ratio(400, 1));
        assert_eq!(parse_decimal(".5").unwrap(), ratio(1, 2));
        assert_eq!(parse_decimal("0").unwrap(), ratio(0, 1));
        for bad in ["", ".", "e5", "1e", "1.2.3", "--1", "1e999999999"] {
            assert!(parse_decimal(bad).is_err(), "{bad:?}");
        }
    }
}
