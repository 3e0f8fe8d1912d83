//! Query strategies for selecting a minimum-value set, and for multiset multicover, when the
//! element values are hidden inside known intervals and each reveal costs one query.
//!
//! * [`model`]: intervals, distributions, instances, realizations, query state.
//! * [`covering`]: the covering view with residual demands and (optimistic) greedy values.
//! * [`offline`]: feasibility, the offline greedy, exact optima, bounds, trace verification.
//! * [`online`]: the query algorithms and baselines, producing [`online::RunTrace`]s.
//! * [`instances`]: named constructions, random families, JSON persistence.
//! * [`harness`]: Monte Carlo trials, statistics, reports, self-checking suites.

pub mod covering;
pub mod error;
pub mod harness;
pub mod instances;
pub mod model;
pub mod offline;
pub mod online;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Rational;
