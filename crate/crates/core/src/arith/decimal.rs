use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MagnitudeRounding {
    Nearest,
    /// Away from zero.
    Up,
    /// Toward zero.
    Down,
}

fn pow10(e: i64) -> Rational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Formats `q` as `d.ddd…e±x` with exactly `digits` significant digits and
/// returns the printed value alongside the string. Zero prints as `0`.
pub fn to_scientific(q: &Rational, digits: u32, mode: MagnitudeRounding) -> (String, Rational) {
    assert!(digits >= 1);
    if q.is_zero() {
        return ("0".to_string(), Rational::zero());
    }
    let neg = q.is_negative();
    let a = q.abs();
    // decimal exponent: 10^e ≤ a < 10^(e+1)
    let approx = (a.numer().bits() as f64 - a.denom().bits() as f64) * std::f64::consts::LOG10_2;
    let mut e = approx.floor() as i64;
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    let scaled = &a * pow10(digits as i64 - 1 - e);
    let (int, frac) = scaled.numer().div_mod_floor(scaled.denom());
    let den = scaled.denom();
    let bump = match mode {
        MagnitudeRounding::Down => false,
        MagnitudeRounding::Up => !frac.is_zero(),
        MagnitudeRounding::Nearest => &frac * 2u32 >= *den,
    };
    let mut int = if bump { int + 1u32 } else { int };
    if int == num_traits::pow(BigInt::from(10), digits as usize) {
        int /= 10u32;
        e += 1;
    }
    let printed = Rational::from_integer(int.clone()) * pow10(e - (digits as i64 - 1));
    let s = int.to_string();
    let mut out = String::with_capacity(s.len() + 8);
    if neg {
        out.push('-');
    }
    out.push_str(&s[..1]);
    if s.len() > 1 {
        out.push('.');
        out.push_str(&s[1..]);
    }
    out.push('e');
    out.push_str(&e.to_string());
    (out, if neg { -printed } else { printed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn formats_with_fixed_digit_count() {
        assert_eq!(to_scientific(&q(1, 8), 3, MagnitudeRounding::Nearest).0, "1.25e-1");
        assert_eq!(to_scientific(&q(-2, 3), 4, MagnitudeRounding::Nearest).0, "-6.667e-1");
        assert_eq!(to_scientific(&q(-2, 3), 4, MagnitudeRounding::Down).0, "-6.666e-1");
        assert_eq!(to_scientific(&q(1000, 1), 1, MagnitudeRounding::Nearest).0, "1e3");
    }

    #[test]
    fn carry_into_next_decade() {
        let (s, v) = to_scientific(&q(9999, 1000), 3, MagnitudeRounding::Up);
        assert_eq!(s, "1.00e1");
        assert_eq!(v, q(10, 1));
    }

    #[test]
    fn printed_value_matches_string() {
        let (s, v) = to_scientific(&q(22, 7), 12, MagnitudeRounding::Nearest);
        assert_eq!(s, "3.14285714286e0");
        assert_eq!(v, q(314285714286, 100000000000));
    }
}
