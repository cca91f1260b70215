use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// A positive integer `n`, the length of the harmonic partial sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct HarmonicIndex(u64);

impl HarmonicIndex {
    /// Largest supported index; keeps `m = n(n+1)/2` inside a `u64`.
    pub const MAX: u64 = u32::MAX as u64;

    pub fn new(n: u64) -> Result<Self> {
        if n == 0 || n > Self::MAX {
            return Err(Error::InvalidIndex(n));
        }
        Ok(HarmonicIndex(n))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn m(self) -> TriangularM {
        m_of(self)
    }
}

impl TryFrom<u64> for HarmonicIndex {
    type Error = Error;
    fn try_from(n: u64) -> Result<Self> {
        Self::new(n)
    }
}

impl From<HarmonicIndex> for u64 {
    fn from(n: HarmonicIndex) -> u64 {
        n.0
    }
}

impl fmt::Display for HarmonicIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The triangular number `m = n(n+1)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TriangularM(u64);

impl TriangularM {
    pub fn get(self) -> u64 {
        self.0
    }

    pub fn as_rational(self) -> Rational {
        Rational::from_integer(BigInt::from(self.0))
    }

    /// `m^k` as an exact rational (negative `k` allowed).
    pub fn pow(self, k: i32) -> Rational {
        num_traits::Pow::pow(self.as_rational(), k)
    }
}

pub fn m_of(n: HarmonicIndex) -> TriangularM {
    let n = n.get();
    let m = if n % 2 == 0 { (n / 2) * (n + 1) } else { n * n.div_ceil(2) };
    TriangularM(m)
}
