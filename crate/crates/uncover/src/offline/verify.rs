use serde::{Deserialize, Serialize};

use super::exact::effective_demands;
use crate::covering::{online_gamma, CoveringView, GreedyKind};
use crate::error::{contract, Result};
use crate::model::{Instance, Kind, Realization};
use crate::online::RunTrace;
use crate::rational::Rational;

/// Outcome of the approximate-greedy test for one outer iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub iteration: usize,
    /// `A(Q ∪ G) ≤ (1 − 1/(α·OPT))·A(Q)`.
    pub active: bool,
    /// `b'(Q) ≥ 1` and `b'(Q ∪ G) ≤ (1 − 1/(α·OPT))·b'(Q)`.
    pub residual: bool,
    pub passed: bool,
}

/// Checks every outer iteration `(Q_j, G_j)` of `trace` against the approximate greedy
/// condition at `w = w*` and online `γ`. `opt` is the optimum for this realization.
pub fn verify_alpha_approx(
    instance: &Instance,
    realization: &Realization,
    trace: &RunTrace,
    alpha: &Rational,
    opt: usize,
) -> Result<Vec<Verdict>> {
    if !trace.is_consistent() {
        return Err(contract("trace iterations do not partition its queries"));
    }
    if let Some(u) = trace.queries.iter().find(|&&u| u >= instance.n_units()) {
        return Err(contract(format!("trace queries unit {u} outside the instance")));
    }
    if trace.iterations.is_empty() {
        return Ok(Vec::new());
    }
    let gamma = online_gamma(instance)?;
    let (view, w) = match instance.kind() {
        Kind::MinSet => (CoveringView::parametric(instance, gamma), realization.wstar()),
        _ => (CoveringView::with_rhs(instance, gamma, &effective_demands(instance, realization)), None),
    };
    let factor = (!alpha.is_zero() && opt > 0).then(|| Rational::one() - (alpha * Rational::from(opt)).recip());
    let one = Rational::one();
    let mut cov = view.empty();
    let mut out = Vec::with_capacity(trace.iterations.len());
    for it in &trace.iterations {
        let a0 = view.active_count(&cov, w);
        let b0 = view.total_residual(&cov, w);
        for &u in &it.queries {
            view.add(&mut cov, u, realization)?;
        }
        let a1 = view.active_count(&cov, w);
        let b1 = view.total_residual(&cov, w);
        let (active, residual) = match &factor {
            None => (a1 == 0, false),
            Some(f) => (Rational::from(a1) <= f * Rational::from(a0), b0 >= one && b1 <= f * &b0),
        };
        out.push(Verdict { iteration: it.index, active, residual, passed: active || residual });
    }
    Ok(out)
}

/// Inner-while limits per outer iteration: `⌈log_{3/2}(m·γ·max width)⌉ + 2` rounds for the
/// cover phase and `⌈log_2 m⌉ + 2` for the count phase.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundLimits {
    pub gc: usize,
    pub gs: usize,
}

fn ceil_log(base: &Rational, x: &Rational) -> usize {
    let mut k = 0;
    let mut p = Rational::one();
    while p < *x {
        p = &p * base;
        k += 1;
    }
    k
}

pub fn round_limits(instance: &Instance) -> Result<RoundLimits> {
    let gamma = online_gamma(instance)?;
    let m = Rational::from(instance.n_constraints());
    let width = instance.intervals().iter().map(|iv| iv.width()).max().unwrap_or_default();
    Ok(RoundLimits {
        gc: ceil_log(&Rational::frac(3, 2), &(&m * &gamma * width)) + 2,
        gs: ceil_log(&Rational::integer(2), &m) + 2,
    })
}

/// Round-count and threshold-growth audit of one phase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundCheck {
    pub iteration: usize,
    pub greedy: GreedyKind,
    pub rounds: usize,
    pub limit: usize,
    /// `d` at the end of each round.
    pub thresholds: Vec<Rational>,
    pub count_ok: bool,
    /// `d` grew by 3/2 (cover) or 2 (count) between consecutive rounds, ignoring the last.
    pub growth_ok: bool,
}

/// Audits every phase of a trace produced by the general selection algorithm.
pub fn round_checks(instance: &Instance, trace: &RunTrace) -> Result<Vec<RoundCheck>> {
    let limits = round_limits(instance)?;
    let mut out = Vec::new();
    for it in &trace.iterations {
        for phase in &it.phases {
            let (limit, growth) = match phase.greedy {
                GreedyKind::Gc => (limits.gc, Rational::frac(3, 2)),
                GreedyKind::Gs => (limits.gs, Rational::integer(2)),
            };
            let thresholds: Vec<Rational> =
                phase.rounds.iter().filter_map(|r| r.steps.last().map(|s| s.d.clone())).collect();
            let k = thresholds.len();
            let growth_ok = (1..k.saturating_sub(1)).all(|j| thresholds[j] >= &growth * &thresholds[j - 1]);
            out.push(RoundCheck {
                iteration: it.index,
                greedy: phase.greedy,
                rounds: phase.rounds.len(),
                limit,
                thresholds,
                count_ok: phase.rounds.len() <= limit,
                growth_ok,
            });
        }
    }
    Ok(out)
}
