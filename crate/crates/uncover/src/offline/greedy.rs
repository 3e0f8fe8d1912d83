use super::exact::effective_demands;
use crate::covering::{offline_gamma, CoveringView, GreedyKind};
use crate::error::{Error, Result};
use crate::model::{Instance, Realization};

/// Two-phase greedy with full information: scale by `1/s_min`, take the largest residual
/// reduction while the total residual is at least 1, then the unit satisfying the most
/// constraints until nothing remains.
pub fn offline_greedy(instance: &Instance, realization: &Realization) -> Result<Vec<usize>> {
    let demand = effective_demands(instance, realization);
    if demand.iter().all(|b| !b.is_positive()) {
        return Ok(Vec::new());
    }
    let gamma = offline_gamma(instance, realization)?;
    let view = CoveringView::with_rhs(instance, gamma, &demand);
    let mut cov = view.empty();
    let mut chosen = Vec::new();
    let mut candidates = instance.nontrivial_units();
    loop {
        let total = view.total_residual(&cov, None);
        if total.is_zero() {
            return Ok(chosen);
        }
        let kind = if total >= crate::Rational::one() { GreedyKind::Gc } else { GreedyKind::Gs };
        let (u, value) = view
            .best_greedy(kind, &cov, &candidates, realization, None)?
            .ok_or_else(|| Error::Invariant("greedy ran out of units".into()))?;
        if !value.is_positive() {
            return Err(Error::Invariant(format!("no unit reduces the residual under {kind:?}")));
        }
        view.add(&mut cov, u, realization)?;
        chosen.push(u);
        candidates.retain(|&h| h != u);
    }
}
