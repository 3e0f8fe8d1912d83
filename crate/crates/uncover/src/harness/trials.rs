use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::stats::summarize;
use crate::error::{Error, Result};
use crate::model::{sample_realization, Instance};
use crate::offline::{bounds, exact_opt, verify_alpha_approx, BoundReport, DEFAULT_BUDGET};
use crate::online::{run, Algorithm};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub trials: usize,
    pub base_seed: u64,
    pub with_opt: bool,
    /// Run the approximate-greedy verifier with this `α` (implies computing the optimum).
    pub verify_alpha: Option<Rational>,
    pub budget: u64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        TrialConfig { trials: 100, base_seed: 0, with_opt: false, verify_alpha: None, budget: DEFAULT_BUDGET }
    }
}

/// Outcome of one seeded run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial_index: usize,
    pub seed: u64,
    pub alg_queries: usize,
    pub opt_queries: Option<usize>,
    /// Why the optimum is missing, e.g. an exhausted search budget.
    pub opt_error: Option<String>,
    pub iterations: usize,
    pub infeasible: bool,
    pub verify_passed: Option<bool>,
}

/// Aggregates of one algorithm on one instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub instance: String,
    pub algorithm: String,
    pub trials: usize,
    pub base_seed: u64,
    pub mean_alg: Option<f64>,
    pub var_alg: Option<f64>,
    pub ci_lo: Option<f64>,
    pub ci_hi: Option<f64>,
    pub mean_opt: Option<f64>,
    pub var_opt: Option<f64>,
    /// `mean(ALG) / mean(OPT)` over the trials with a known optimum.
    pub ratio: Option<f64>,
    pub grsetu: Option<u32>,
    pub bounds: BoundReport,
    pub verify_pass_rate: Option<f64>,
    pub opt_failures: usize,
    pub infeasible_runs: usize,
}

fn one_trial(instance: &Instance, algorithm: Algorithm, cfg: &TrialConfig, trial_index: usize) -> Result<TrialRecord> {
    let seed = cfg.base_seed.wrapping_add(trial_index as u64);
    let real = sample_realization(instance, seed);
    let trace = run(algorithm, instance, &real, Some(seed))?;
    let mut rec = TrialRecord {
        trial_index,
        seed,
        alg_queries: trace.total(),
        opt_queries: None,
        opt_error: None,
        iterations: trace.iterations.len(),
        infeasible: trace.infeasible,
        verify_passed: None,
    };
    if cfg.with_opt || cfg.verify_alpha.is_some() {
        match exact_opt(instance, &real, cfg.budget) {
            Ok(opt) => {
                rec.opt_queries = Some(opt.opt_size);
                if let Some(alpha) = &cfg.verify_alpha {
                    let verdicts = verify_alpha_approx(instance, &real, &trace, alpha, opt.opt_size)?;
                    rec.verify_passed = Some(verdicts.iter().all(|v| v.passed));
                }
            }
            Err(e @ Error::BudgetExhausted { .. }) => rec.opt_error = Some(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(rec)
}

/// Runs `cfg.trials` seeded trials in parallel; trial `i` uses seed `base_seed + i` and the
/// records come back in trial order.
pub fn run_records(instance: &Instance, algorithm: Algorithm, cfg: &TrialConfig) -> Result<Vec<TrialRecord>> {
    (0..cfg.trials).into_par_iter().map(|i| one_trial(instance, algorithm, cfg, i)).collect()
}

pub fn aggregate(
    instance: &Instance,
    label: &str,
    algorithm: Algorithm,
    cfg: &TrialConfig,
    records: &[TrialRecord],
) -> Result<Report> {
    let alg: Vec<f64> = records.iter().map(|r| r.alg_queries as f64).collect();
    let paired: Vec<(f64, f64)> =
        records.iter().filter_map(|r| r.opt_queries.map(|o| (r.alg_queries as f64, o as f64))).collect();
    let opt: Vec<f64> = paired.iter().map(|p| p.1).collect();
    let s_alg = summarize(&alg);
    let s_opt = summarize(&opt);
    let ratio = match (summarize(&paired.iter().map(|p| p.0).collect::<Vec<_>>()), s_opt) {
        (Some(a), Some(o)) if o.mean > 0.0 => Some(a.mean / o.mean),
        _ => None,
    };
    let verified: Vec<bool> = records.iter().filter_map(|r| r.verify_passed).collect();
    let verify_pass_rate =
        (!verified.is_empty()).then(|| verified.iter().filter(|&&v| v).count() as f64 / verified.len() as f64);
    let bounds = bounds(instance, None)?;
    Ok(Report {
        instance: label.to_string(),
        algorithm: algorithm.to_string(),
        trials: records.len(),
        base_seed: cfg.base_seed,
        mean_alg: s_alg.map(|s| s.mean),
        var_alg: s_alg.map(|s| s.variance),
        ci_lo: s_alg.map(|s| s.ci_lo),
        ci_hi: s_alg.map(|s| s.ci_hi),
        mean_opt: s_opt.map(|s| s.mean),
        var_opt: s_opt.map(|s| s.variance),
        ratio,
        grsetu: bounds.grsetu,
        bounds,
        verify_pass_rate,
        opt_failures: records.iter().filter(|r| r.opt_error.is_some()).count(),
        infeasible_runs: records.iter().filter(|r| r.infeasible).count(),
    })
}

pub fn run_trials(instance: &Instance, label: &str, algorithm: Algorithm, cfg: &TrialConfig) -> Result<Report> {
    let records = run_records(instance, algorithm, cfg)?;
    aggregate(instance, label, algorithm, cfg, &records)
}
