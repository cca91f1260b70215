//! Exact rationals and self-validating real arithmetic.

mod ball;
pub mod decimal;
mod dyadic;
mod gamma;
mod ln;
mod precision;
mod rational;

pub use ball::CertifiedReal;
pub use dyadic::{Dyadic, Round};
pub use gamma::{
    gamma_constant, gamma_cross_check, gamma_euler_maclaurin, GammaCrossCheck, GAMMA_MAX_BITS,
};
pub(crate) use gamma::gamma_at;
pub use ln::ln_enclosure;
pub use precision::{
    certify_open_interval, resolve_strict_sign, IntervalCertificate, PrecisionPolicy, StrictSign,
};
pub use rational::{int, rational_arith, ratio, Rational, RationalOp, RationalResult};
