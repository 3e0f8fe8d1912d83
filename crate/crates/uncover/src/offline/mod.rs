//! Full-information machinery: feasibility, the offline greedy, exact optima, bounds and
//! trace verification.

mod bounds;
mod exact;
mod feasibility;
mod greedy;
mod verify;

pub use bounds::{bounds, ceil_ln, BoundReport};
pub use exact::{disjoint_prefix_len, effective_demands, exact_opt, exact_opt_disjoint, OptResult, DEFAULT_BUDGET};
pub use feasibility::{check_feasible, ilp_feasible};
pub use greedy::offline_greedy;
pub use verify::{round_checks, round_limits, verify_alpha_approx, RoundCheck, RoundLimits, Verdict};
