//! The error functional `ε_n = H_n − ½ ln(2m) − γ`, the `Θ_n` certificate,
//! certified tail series and tail integrals, and exact checks of every
//! partial-fraction and Kummer identity behind the five-term expansion.

mod decomposition;
mod epsilon;
mod identities;
mod integral;
mod positivity;
mod tail;
mod theta;
mod zeta;

pub use decomposition::{
    decomposition_check, representation, DecompositionOutcome, Representation,
};
pub use epsilon::{epsilon, epsilon_from_state, epsilon_step, scan_states, EpsilonValue};
pub use identities::{identity_check, IdentityId, IdentityOutcome};
pub use integral::{integral_term, tail_integral_sum, MAX_INTEGRAL_POWER};
pub use positivity::{
    pos_a_summand_positive, pos_b_positive, positivity_check, PositivityOutcome,
};
pub use tail::{tail_rational_sum, PartialFractions, TailSpec};
pub use theta::{
    alternating_truncation_check, alternating_truncation_scan, theta, theta_from_state,
    theta_scan, ThetaCertificate, TruncationCheck,
};
pub use zeta::hurwitz_tail;
