//! Intervals, distributions, instances, realizations and the query state.

mod distribution;
mod instance;
mod maxset;
mod realization;
mod state;

pub use distribution::{Distribution, Interval, SAMPLE_BITS};
pub use instance::{Entry, Instance, Kind};
pub use maxset::{is_feasible_maxset, reflect_maxset};
pub use realization::{sample_realization, Realization, RealizationDoc, Reveal};
pub use state::QueryState;

use crate::rational::Rational;

/// `τ = min_i Pr[w_i >= center_i]`, with `τ_i = 1` on trivial intervals.
pub fn balancing_tau(instance: &Instance) -> Rational {
    instance.intervals().iter().map(Interval::tau).min().unwrap_or_else(Rational::one)
}

/// `τ̄ = min_i Pr[w_i <= center_i]`.
pub fn inverse_balancing_tau(instance: &Instance) -> Rational {
    instance.intervals().iter().map(Interval::tau_bar).min().unwrap_or_else(Rational::one)
}

/// The multicover balancing parameter when it is known in closed form: 1/2 if every
/// coefficient law is symmetric, otherwise `None`.
pub fn tau_prime(instance: &Instance) -> Option<Rational> {
    instance.intervals().iter().all(Interval::is_symmetric).then(|| Rational::frac(1, 2))
}
