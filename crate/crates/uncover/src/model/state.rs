use super::instance::{Instance, Kind};
use super::realization::{Realization, Reveal};
use crate::error::{contract, Result};
use crate::rational::Rational;

/// The evolving query set `Q` of one run, with incrementally maintained limits.
#[derive(Clone, Debug)]
pub struct QueryState<'a> {
    instance: &'a Instance,
    realization: &'a Realization,
    order: Vec<usize>,
    queried: Vec<bool>,
    revealed: Vec<bool>,
    lower: Vec<Rational>,
    upper: Vec<Rational>,
    pending: Vec<usize>,
    covered: Vec<Rational>,
}

impl<'a> QueryState<'a> {
    pub fn new(instance: &'a Instance, realization: &'a Realization) -> Result<Self> {
        if realization.values().len() != instance.n_intervals() {
            return Err(contract("realization does not belong to this instance"));
        }
        let (lower, upper, pending) = if instance.is_minset_family() {
            let m = instance.sets().len();
            let lower = (0..m).map(|s| instance.set_lower(s)).collect();
            let upper = (0..m).map(|s| instance.set_upper(s)).collect();
            let pending = instance
                .sets()
                .iter()
                .map(|s| s.iter().filter(|&&i| !instance.interval(i).is_trivial()).count())
                .collect();
            (lower, upper, pending)
        } else {
            (Vec::new(), Vec::new(), Vec::new())
        };
        Ok(QueryState {
            instance,
            realization,
            order: Vec::new(),
            queried: vec![false; instance.n_units()],
            revealed: vec![false; instance.n_intervals()],
            lower,
            upper,
            pending,
            covered: vec![Rational::zero(); instance.n_constraints()],
        })
    }

    /// Starts from an arbitrary query set, applied in the given order.
    pub fn with_queries(instance: &'a Instance, realization: &'a Realization, q: &[usize]) -> Result<Self> {
        let mut st = QueryState::new(instance, realization)?;
        for &u in q {
            st.query(u)?;
        }
        Ok(st)
    }

    pub fn instance(&self) -> &'a Instance {
        self.instance
    }

    pub fn realization(&self) -> &'a Realization {
        self.realization
    }

    /// Reveals every interval of `unit` and returns the revealed values.
    pub fn query(&mut self, unit: usize) -> Result<Vec<Rational>> {
        if unit >= self.queried.len() {
            return Err(contract(format!("unit {unit} out of range")));
        }
        if self.queried[unit] {
            return Err(contract(format!("unit {unit} queried twice")));
        }
        self.queried[unit] = true;
        self.order.push(unit);
        let inst = self.instance;
        let mut out = Vec::new();
        for k in inst.unit_intervals(unit) {
            self.revealed[k] = true;
            out.push(self.realization.value(k).clone());
        }
        for e in inst.entries(unit) {
            let v = self.realization.value(e.interval);
            self.covered[e.constraint] += inst.coefficient(e.interval, v);
            if inst.is_minset_family() {
                let iv = inst.interval(e.interval);
                let s = e.constraint;
                self.lower[s] += v - &iv.lower;
                self.upper[s] -= &iv.upper - v;
                if !iv.is_trivial() {
                    self.pending[s] -= 1;
                }
            }
        }
        Ok(out)
    }

    pub fn queries(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn is_queried(&self, unit: usize) -> bool {
        self.queried[unit]
    }

    /// Unqueried non-trivial units in index order.
    pub fn candidates(&self) -> Vec<usize> {
        (0..self.queried.len()).filter(|&u| !self.queried[u] && !self.instance.unit_is_trivial(u)).collect()
    }

    /// `L_S(Q)`.
    pub fn set_lower(&self, s: usize) -> &Rational {
        &self.lower[s]
    }

    /// `U_S(Q)`.
    pub fn set_upper(&self, s: usize) -> &Rational {
        &self.upper[s]
    }

    pub fn lowers(&self) -> &[Rational] {
        &self.lower
    }

    pub fn uppers(&self) -> &[Rational] {
        &self.upper
    }

    /// Whether every non-trivial member of set `s` has been queried.
    pub fn set_revealed(&self, s: usize) -> bool {
        self.pending[s] == 0
    }

    /// Unscaled `Σ a` over queried coefficient slots of constraint `c`.
    pub fn covered(&self, c: usize) -> &Rational {
        &self.covered[c]
    }

    /// Some fully revealed set attains the smallest lower limit.
    pub fn is_solved_minset(&self) -> Result<bool> {
        if !self.instance.is_minset_family() {
            return Err(contract("is_solved_minset needs a minset-family instance"));
        }
        let Some(min) = self.lower.iter().min() else { return Ok(false) };
        Ok((0..self.lower.len()).any(|s| self.pending[s] == 0 && self.lower[s] == *min))
    }

    /// Unscaled residual `max(b_c - Σ a, 0)` of a fixed right-hand side.
    pub fn residual(&self, c: usize) -> Rational {
        (&self.instance.rhs()[c] - &self.covered[c]).pos()
    }

    /// No unqueried unit can still reduce a positive residual.
    pub fn is_solved_cover(&self) -> Result<bool> {
        if self.instance.kind() == Kind::MinSet {
            return Err(contract("is_solved_cover needs fixed right-hand sides"));
        }
        let inst = self.instance;
        for c in 0..inst.n_constraints() {
            if !self.residual(c).is_positive() {
                continue;
            }
            for &u in inst.constraint_units(c) {
                if self.queried[u] {
                    continue;
                }
                let helps = inst.entries(u).iter().any(|e| e.constraint == c && inst.cap(e.interval).is_positive());
                if helps {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The termination predicate of the instance's kind.
    pub fn is_solved(&self) -> bool {
        match self.instance.kind() {
            Kind::MinSet => self.is_solved_minset(),
            _ => self.is_solved_cover(),
        }
        .expect("kind checked")
    }

    /// Fixed right-hand sides left positive after the run.
    pub fn is_infeasible_end(&self) -> bool {
        self.instance.kind() != Kind::MinSet && (0..self.instance.n_constraints()).any(|c| self.residual(c).is_positive())
    }
}

impl Reveal for QueryState<'_> {
    fn revealed(&self, interval: usize) -> Option<&Rational> {
        if self.revealed[interval] {
            Some(self.realization.value(interval))
        } else {
            None
        }
    }
}
