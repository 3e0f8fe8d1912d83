//! Monte Carlo trials, statistics, closed-form expectations, report emission and the
//! self-checking suites behind the `verify` subcommand.

mod closed_form;
mod emit;
mod stats;
mod suites;
mod trials;

pub use closed_form::{closed_form_expectations, ClosedForm};
pub use emit::{emit, parse_reports, to_csv, to_json, Format, CSV_COLUMNS};
pub use stats::{summarize, Summary, Z95};
pub use suites::{run_suite, Check, Suite, SuiteConfig, SuiteOutcome};
pub use trials::{aggregate, run_records, run_trials, Report, TrialConfig, TrialRecord};
