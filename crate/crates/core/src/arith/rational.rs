use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RationalOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Cmp,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalResult {
    Value(Rational),
    Ordering(Ordering),
}

impl RationalResult {
    pub fn value(self) -> Option<Rational> {
        match self {
            RationalResult::Value(v) => Some(v),
            RationalResult::Ordering(_) => None,
        }
    }
}

/// Exact binary operation on two rationals. `Neg` ignores `b`.
pub fn rational_arith(a: &Rational, b: &Rational, op: RationalOp) -> Result<RationalResult> {
    use RationalResult::*;
    Ok(match op {
        RationalOp::Add => Value(a + b),
        RationalOp::Sub => Value(a - b),
        RationalOp::Mul => Value(a * b),
        RationalOp::Div => {
            if b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Value(a / b)
        }
        RationalOp::Neg => Value(-a),
        RationalOp::Cmp => Ordering(a.cmp(b)),
    })
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int<N: Into<BigInt>>(n: N) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coefficient_arithmetic() {
        let r = rational_arith(&ratio(1, 12), &ratio(1, 120), RationalOp::Sub).unwrap();
        assert_eq!(r, RationalResult::Value(ratio(3, 40)));
        let tele = &ratio(1, 6) * (ratio(1, 2) - ratio(1, 6));
        assert_eq!(tele, ratio(1, 18));
    }

    #[test]
    fn canonical_form() {
        let r = ratio(5344, 26943840);
        assert_eq!(r.numer(), &BigInt::from(167));
        assert_eq!(r.denom(), &BigInt::from(841995));
        let n = ratio(3, -6);
        assert_eq!(n.numer(), &BigInt::from(-1));
        assert_eq!(n.denom(), &BigInt::from(2));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rational_arith(&ratio(1, 2), &Rational::zero(), RationalOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            rational_arith(&ratio(1, 2), &ratio(2, 3), RationalOp::Cmp).unwrap(),
            RationalResult::Ordering(Ordering::Less)
        );
    }

    proptest! {
        #[test]
        fn results_stay_canonical(a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000) {
            let x = ratio(a, b);
            let y = ratio(c, d);
            for op in [RationalOp::Add, RationalOp::Sub, RationalOp::Mul, RationalOp::Div, RationalOp::Neg] {
                if let Ok(RationalResult::Value(v)) = rational_arith(&x, &y, op) {
                    prop_assert!(v.denom() > &BigInt::zero());
                    prop_assert_eq!(num_integer::Integer::gcd(v.numer(), v.denom()) == BigInt::from(1) || v.is_zero(), true);
                }
            }
        }
    }
}
