//! The covering view of a query problem.
//!
//! Every constraint `c` asks `Σ_{u ∈ Q} a'_{u,c} ≥ b'_c`. Coefficients and demands are scaled
//! by `γ`. For plain MinSet instances the demand of set `S` depends on a hypothesized minimum
//! value `w`: `b'_S(w) = γ·(w − L_S)`. The other kinds carry fixed demands.

mod search;

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::model::{Instance, Kind, Realization, Reveal};
use crate::rational::Rational;

pub use search::{Bound, SEARCH_RESOLUTION};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyKind {
    /// Reduction of the total residual demand.
    Gc,
    /// Number of constraints that become satisfied.
    Gs,
}

/// `2 / s_min` with `s_min` the smallest positive coefficient cap.
pub fn online_gamma(instance: &Instance) -> Result<Rational> {
    let s_min = (0..instance.n_intervals())
        .map(|k| instance.cap(k))
        .filter(Rational::is_positive)
        .min()
        .ok_or_else(|| Error::Degenerate("every coefficient cap is zero".into()))?;
    Ok(Rational::integer(2) / s_min)
}

/// `1 / s_min` with `s_min` the smallest positive realized coefficient.
pub fn offline_gamma(instance: &Instance, realization: &Realization) -> Result<Rational> {
    let s_min = (0..instance.n_intervals())
        .map(|k| instance.coefficient(k, realization.value(k)))
        .filter(Rational::is_positive)
        .min()
        .ok_or_else(|| Error::Degenerate("every realized coefficient is zero".into()))?;
    Ok(s_min.recip())
}

/// Online factor when `offline` is `None`, otherwise the offline factor for that realization.
pub fn scale_factor(instance: &Instance, offline: Option<&Realization>) -> Result<Rational> {
    match offline {
        Some(real) => offline_gamma(instance, real),
        None => online_gamma(instance),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Demand {
    /// Scaled fixed demand per constraint.
    Fixed(Vec<Rational>),
    /// Scaled lower limit `γ·L_S` per set; the demand is `γ·w − γ·L_S`.
    Parametric(Vec<Rational>),
}

/// Scaled covering system over an instance.
#[derive(Clone, Debug)]
pub struct CoveringView<'a> {
    instance: &'a Instance,
    gamma: Rational,
    demand: Demand,
    caps: Vec<Rational>,
}

/// The query set `Q` seen through the covering lens: membership plus scaled coverage per
/// constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    members: Vec<bool>,
    sums: Vec<Rational>,
}

impl Coverage {
    pub fn contains(&self, unit: usize) -> bool {
        self.members[unit]
    }

    /// Scaled `Σ a'` of constraint `c`.
    pub fn sum(&self, c: usize) -> &Rational {
        &self.sums[c]
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&u| self.members[u]).collect()
    }
}

impl<'a> CoveringView<'a> {
    /// Parametric demands for plain MinSet, the instance's fixed demands otherwise.
    pub fn natural(instance: &'a Instance, gamma: Rational) -> Self {
        match instance.kind() {
            Kind::MinSet => Self::parametric(instance, gamma),
            _ => Self::with_rhs(instance, gamma, instance.rhs()),
        }
    }

    /// Demands `γ·(w − L_S)` for a hypothesized `w`.
    pub fn parametric(instance: &'a Instance, gamma: Rational) -> Self {
        let lows = (0..instance.sets().len()).map(|s| &gamma * instance.set_lower(s)).collect();
        Self::build(instance, gamma, Demand::Parametric(lows))
    }

    /// Fixed unscaled demands `rhs`, one per constraint.
    pub fn with_rhs(instance: &'a Instance, gamma: Rational, rhs: &[Rational]) -> Self {
        assert_eq!(rhs.len(), instance.n_constraints(), "one demand per constraint");
        let scaled = rhs.iter().map(|b| &gamma * b).collect();
        Self::build(instance, gamma, Demand::Fixed(scaled))
    }

    fn build(instance: &'a Instance, gamma: Rational, demand: Demand) -> Self {
        let caps = (0..instance.n_intervals()).map(|k| &gamma * instance.cap(k)).collect();
        CoveringView { instance, gamma, demand, caps }
    }

    pub fn instance(&self) -> &'a Instance {
        self.instance
    }

    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn is_parametric(&self) -> bool {
        matches!(self.demand, Demand::Parametric(_))
    }

    pub fn n_constraints(&self) -> usize {
        self.instance.n_constraints()
    }

    /// Scaled cap of interval `k`.
    pub fn cap(&self, k: usize) -> &Rational {
        &self.caps[k]
    }

    pub fn empty(&self) -> Coverage {
        Coverage {
            members: vec![false; self.instance.n_units()],
            sums: vec![Rational::zero(); self.instance.n_constraints()],
        }
    }

    /// Scaled coefficients of `unit`, one per entry.
    pub fn coefficients(&self, unit: usize, src: &impl Reveal) -> Result<Vec<Rational>> {
        self.instance
            .entries(unit)
            .iter()
            .map(|e| {
                let v = src
                    .revealed(e.interval)
                    .ok_or_else(|| contract(format!("coefficient of unit {unit} is not revealed")))?;
                Ok(&self.gamma * self.instance.coefficient(e.interval, v))
            })
            .collect()
    }

    pub fn add(&self, cov: &mut Coverage, unit: usize, src: &impl Reveal) -> Result<()> {
        if cov.members[unit] {
            return Err(contract(format!("unit {unit} already in Q")));
        }
        let coeffs = self.coefficients(unit, src)?;
        for (e, a) in self.instance.entries(unit).iter().zip(coeffs) {
            cov.sums[e.constraint] += a;
        }
        cov.members[unit] = true;
        Ok(())
    }

    pub fn coverage(&self, q: &[usize], src: &impl Reveal) -> Result<Coverage> {
        let mut cov = self.empty();
        for &u in q {
            self.add(&mut cov, u, src)?;
        }
        Ok(cov)
    }

    /// Scaled demand of constraint `c` before any coverage.
    pub fn demand(&self, c: usize, w: Option<&Rational>) -> Rational {
        match &self.demand {
            Demand::Fixed(b) => b[c].clone(),
            Demand::Parametric(low) => {
                let w = w.expect("parametric view needs a hypothesized w");
                &self.gamma * w - &low[c]
            }
        }
    }

    /// `b'_c(Q, w)`.
    pub fn residual(&self, cov: &Coverage, c: usize, w: Option<&Rational>) -> Rational {
        (self.demand(c, w) - &cov.sums[c]).pos()
    }

    /// Per-constraint residuals and their total.
    pub fn residual_rhs(&self, cov: &Coverage, w: Option<&Rational>) -> (Vec<Rational>, Rational) {
        let per: Vec<Rational> = (0..self.n_constraints()).map(|c| self.residual(cov, c, w)).collect();
        let total = per.iter().sum();
        (per, total)
    }

    pub fn total_residual(&self, cov: &Coverage, w: Option<&Rational>) -> Rational {
        (0..self.n_constraints()).map(|c| self.residual(cov, c, w)).sum()
    }

    /// `A(Q, w)`: constraints with positive residual.
    pub fn active_count(&self, cov: &Coverage, w: Option<&Rational>) -> usize {
        (0..self.n_constraints()).filter(|&c| self.residual(cov, c, w).is_positive()).count()
    }

    /// `gc(Q, G, w)` or `gs(Q, G, w)` using revealed coefficients of the group.
    pub fn greedy_value(
        &self,
        kind: GreedyKind,
        cov: &Coverage,
        group: &[usize],
        src: &impl Reveal,
        w: Option<&Rational>,
    ) -> Result<Rational> {
        let mut after = cov.clone();
        for &u in group {
            if cov.members[u] {
                return Err(contract(format!("unit {u} of the group is already in Q")));
            }
            self.add(&mut after, u, src)?;
        }
        Ok(self.difference(kind, cov, &after, w))
    }

    /// `g(Q, Q') ` for `Q ⊆ Q'` given both coverages.
    pub fn difference(&self, kind: GreedyKind, before: &Coverage, after: &Coverage, w: Option<&Rational>) -> Rational {
        let mut total = Rational::zero();
        let mut count = 0usize;
        for c in 0..self.n_constraints() {
            if before.sums[c] == after.sums[c] {
                continue;
            }
            let b0 = self.residual(before, c, w);
            let b1 = self.residual(after, c, w);
            match kind {
                GreedyKind::Gc => total += b0 - b1,
                GreedyKind::Gs => {
                    if b0.is_positive() && b1.is_zero() {
                        count += 1;
                    }
                }
            }
        }
        match kind {
            GreedyKind::Gc => total,
            GreedyKind::Gs => Rational::from(count),
        }
    }

    /// `ogc(Q, unit, w)` or `ogs(Q, unit, w)`: the greedy value if every coefficient of `unit`
    /// were at its cap.
    pub fn optimistic_value(&self, kind: GreedyKind, cov: &Coverage, unit: usize, w: Option<&Rational>) -> Rational {
        debug_assert!(!cov.members[unit], "optimistic value of a queried unit");
        let mut total = Rational::zero();
        let mut count = 0usize;
        for e in self.instance.entries(unit) {
            let b = self.residual(cov, e.constraint, w);
            let cap = &self.caps[e.interval];
            match kind {
                GreedyKind::Gc => total += if b < *cap { b } else { cap.clone() },
                GreedyKind::Gs => {
                    if b.is_positive() && b <= *cap {
                        count += 1;
                    }
                }
            }
        }
        match kind {
            GreedyKind::Gc => total,
            GreedyKind::Gs => Rational::from(count),
        }
    }

    /// Unit with the largest optimistic value at `w`, lowest index on ties.
    pub fn best_optimistic(
        &self,
        kind: GreedyKind,
        cov: &Coverage,
        candidates: &[usize],
        w: Option<&Rational>,
    ) -> Option<(usize, Rational)> {
        let mut best: Option<(usize, Rational)> = None;
        for &u in candidates {
            let v = self.optimistic_value(kind, cov, u, w);
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some((u, v));
            }
        }
        best
    }

    /// Unit with the largest real greedy value, lowest index on ties.
    pub fn best_greedy(
        &self,
        kind: GreedyKind,
        cov: &Coverage,
        candidates: &[usize],
        src: &impl Reveal,
        w: Option<&Rational>,
    ) -> Result<Option<(usize, Rational)>> {
        let mut best: Option<(usize, Rational)> = None;
        for &u in candidates {
            let v = self.greedy_value(kind, cov, &[u], src, w)?;
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some((u, v));
            }
        }
        Ok(best)
    }

    /// Value `w` at which constraint `c` starts to have positive residual (parametric only).
    pub fn activation_point(&self, cov: &Coverage, c: usize) -> Rational {
        match &self.demand {
            Demand::Parametric(low) => (&low[c] + &cov.sums[c]) / &self.gamma,
            Demand::Fixed(_) => panic!("activation point of a fixed demand"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Interval;
    use crate::rational::r;

    fn single() -> (Instance, Realization) {
        let inst = Instance::minset(
            vec![Interval::uniform(r("0"), r("2")), Interval::uniform(r("1"), r("2")), Interval::trivial(r("1"))],
            vec![vec![0, 1], vec![2]],
        )
        .unwrap();
        let real = Realization::new(&inst, vec![r("3/2"), r("5/4"), r("1")]).unwrap();
        (inst, real)
    }

    #[test]
    fn gammas() {
        let (inst, real) = single();
        assert_eq!(online_gamma(&inst).unwrap(), r("2"));
        assert_eq!(offline_gamma(&inst, &real).unwrap(), r("4"));
        let flat = Instance::minset(vec![Interval::trivial(r("1"))], vec![vec![0]]).unwrap();
        assert!(matches!(online_gamma(&flat), Err(Error::Degenerate(_))));
    }

    #[test]
    fn unrevealed_group_is_rejected() {
        let (inst, real) = single();
        let st = crate::model::QueryState::new(&inst, &real).unwrap();
        let view = CoveringView::natural(&inst, r("2"));
        let cov = view.empty();
        let w = r("1");
        assert!(view.greedy_value(GreedyKind::Gc, &cov, &[0], &st, Some(&w)).is_err());
        assert!(view.greedy_value(GreedyKind::Gc, &cov, &[0], &real, Some(&w)).is_ok());
    }

    #[test]
    fn trivial_unit_has_no_optimistic_value() {
        let (inst, _) = single();
        let view = CoveringView::natural(&inst, r("2"));
        let cov = view.empty();
        let w = r("3");
        assert!(view.optimistic_value(GreedyKind::Gc, &cov, 2, Some(&w)).is_zero());
        assert!(view.optimistic_value(GreedyKind::Gs, &cov, 2, Some(&w)).is_zero());
    }
}
