//! Minimum-cardinality query sets by branch and bound.

use serde::{Deserialize, Serialize};

use crate::error::{contract, Error, Result};
use crate::model::{Instance, Kind, Realization};
use crate::rational::Rational;

/// Node budget used when callers do not pass one.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptResult {
    pub opt_size: usize,
    /// A witness, sorted by unit index.
    pub opt_set: Vec<usize>,
    pub node_count: u64,
    /// The set whose members were forced into the witness (plain MinSet only).
    pub star: Option<usize>,
}

/// Unscaled coefficient of every unit on every constraint it touches.
pub(crate) fn coefficient_rows(instance: &Instance, realization: &Realization) -> Vec<Vec<(usize, Rational)>> {
    (0..instance.n_units())
        .map(|u| {
            if instance.unit_is_trivial(u) {
                return Vec::new();
            }
            instance
                .entries(u)
                .iter()
                .map(|e| (e.constraint, instance.coefficient(e.interval, realization.value(e.interval))))
                .filter(|(_, a)| a.is_positive())
                .collect()
        })
        .collect()
}

/// Demands every algorithm must meet: `w* − L_S` for plain MinSet; for fixed right-hand sides
/// the demand is capped at what querying everything achieves.
pub fn effective_demands(instance: &Instance, realization: &Realization) -> Vec<Rational> {
    match instance.kind() {
        Kind::MinSet => {
            let wstar = realization.wstar().expect("minset realization has w*");
            (0..instance.sets().len()).map(|s| wstar - instance.set_lower(s)).collect()
        }
        _ => {
            let rows = coefficient_rows(instance, realization);
            let mut total = vec![Rational::zero(); instance.n_constraints()];
            for row in &rows {
                for (c, a) in row {
                    total[*c] += a;
                }
            }
            instance.rhs().iter().zip(total).map(|(b, t)| if *b < t { b.clone() } else { t }).collect()
        }
    }
}

struct Search<'a> {
    rows: &'a [Vec<(usize, Rational)>],
    /// Units touching each constraint, by descending coefficient then index.
    columns: Vec<Vec<(usize, Rational)>>,
    budget: u64,
    nodes: u64,
    best: Option<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(rows: &'a [Vec<(usize, Rational)>], m: usize, budget: u64) -> Self {
        let mut columns = vec![Vec::new(); m];
        for (u, row) in rows.iter().enumerate() {
            for (c, a) in row {
                columns[*c].push((u, a.clone()));
            }
        }
        for col in &mut columns {
            col.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        }
        Search { rows, columns, budget, nodes: 0, best: None }
    }

    /// Fewest available units that can clear `need` on `c`; `None` if impossible.
    fn needed(&self, c: usize, need: &Rational, avail: &[bool]) -> Option<usize> {
        let mut acc = Rational::zero();
        let mut k = 0;
        for (u, a) in &self.columns[c] {
            if !avail[*u] {
                continue;
            }
            acc += a;
            k += 1;
            if acc >= *need {
                return Some(k);
            }
        }
        None
    }

    fn apply(&self, residual: &mut [Rational], u: usize, sign: bool) {
        for (c, a) in &self.rows[u] {
            if sign {
                residual[*c] -= a;
            } else {
                residual[*c] += a;
            }
        }
    }

    fn dfs(&mut self, residual: &mut Vec<Rational>, chosen: &mut Vec<usize>, avail: &mut Vec<bool>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted { budget: self.budget, lower: 0, upper: 0 });
        }
        let mut bound = 0;
        let mut pick: Option<(usize, usize)> = None;
        for (c, need) in residual.iter().enumerate() {
            if !need.is_positive() {
                continue;
            }
            let Some(k) = self.needed(c, need, avail) else { return Ok(()) };
            bound = bound.max(k);
            let width = self.columns[c].iter().filter(|(u, _)| avail[*u]).count();
            if pick.is_none_or(|(_, w)| width < w) {
                pick = Some((c, width));
            }
        }
        let Some((c, _)) = pick else {
            if self.best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
                self.best = Some(chosen.clone());
            }
            return Ok(());
        };
        if self.best.as_ref().is_some_and(|b| chosen.len() + bound >= b.len()) {
            return Ok(());
        }
        let branch: Vec<usize> = self.columns[c].iter().map(|(u, _)| *u).filter(|&u| avail[u]).collect();
        let mut banned = Vec::new();
        let mut result = Ok(());
        for u in branch {
            avail[u] = false;
            chosen.push(u);
            self.apply(residual, u, true);
            result = self.dfs(residual, chosen, avail);
            self.apply(residual, u, false);
            chosen.pop();
            banned.push(u);
            if result.is_err() {
                break;
            }
        }
        for u in banned {
            avail[u] = true;
        }
        result
    }

    /// Cheapest cover of `demand` that contains `forced`.
    fn solve(&mut self, demand: &[Rational], forced: &[usize]) -> Result<()> {
        let mut residual = demand.to_vec();
        let mut avail = vec![true; self.rows.len()];
        for &u in forced {
            avail[u] = false;
            self.apply(&mut residual, u, true);
        }
        let mut chosen = forced.to_vec();
        self.dfs(&mut residual, &mut chosen, &mut avail)
    }
}

fn root_bound(rows: &[Vec<(usize, Rational)>], demand: &[Rational]) -> usize {
    let s = Search::new(rows, demand.len(), 0);
    let avail = vec![true; rows.len()];
    (0..demand.len())
        .filter(|&c| demand[c].is_positive())
        .filter_map(|c| s.needed(c, &demand[c], &avail))
        .max()
        .unwrap_or(0)
}

/// Minimum number of queries that solve the instance under this realization.
///
/// For plain MinSet every candidate for the minimum-value set is tried with its non-trivial
/// members forced in; units are then branched on by descending coefficient. For fixed
/// right-hand sides the demands are first capped at what all units together achieve.
pub fn exact_opt(instance: &Instance, realization: &Realization, budget: u64) -> Result<OptResult> {
    let rows = coefficient_rows(instance, realization);
    let demand = effective_demands(instance, realization);
    let mut search = Search::new(&rows, demand.len(), budget);
    let mut star = None;
    let outcome = if instance.kind() == Kind::MinSet {
        let wstar = realization.wstar().expect("minset realization has w*");
        let mut out = Ok(());
        for (s, value) in realization.set_values().iter().enumerate() {
            if value != wstar {
                continue;
            }
            let forced: Vec<usize> =
                instance.sets()[s].iter().copied().filter(|&i| !instance.interval(i).is_trivial()).collect();
            let before = search.best.as_ref().map(Vec::len);
            out = search.solve(&demand, &forced);
            if search.best.as_ref().map(Vec::len) != before {
                star = Some(s);
            }
            if out.is_err() {
                break;
            }
        }
        out
    } else {
        search.solve(&demand, &[])
    };
    let nodes = search.nodes;
    match (outcome, search.best) {
        (Ok(()), Some(mut set)) => {
            set.sort_unstable();
            Ok(OptResult { opt_size: set.len(), opt_set: set, node_count: nodes, star })
        }
        (Ok(()), None) => Err(Error::Invariant("no feasible query set found".into())),
        (Err(Error::BudgetExhausted { budget, .. }), best) => {
            let upper = best.map_or_else(|| instance.nontrivial_units().len(), |b| b.len());
            Err(Error::BudgetExhausted { budget, lower: root_bound(&rows, &demand), upper })
        }
        (Err(e), _) => Err(e),
    }
}

/// Optimum for pairwise-disjoint sets: per set, the shortest prefix of its coefficients in
/// non-increasing order that covers `w* − L_S`.
pub fn exact_opt_disjoint(instance: &Instance, realization: &Realization) -> Result<OptResult> {
    if instance.kind() != Kind::MinSet || !instance.is_disjoint() {
        return Err(contract("exact_opt_disjoint needs a minset instance with pairwise-disjoint sets"));
    }
    let demand = effective_demands(instance, realization);
    let mut set = Vec::new();
    for (s, members) in instance.sets().iter().enumerate() {
        let mut order: Vec<(usize, Rational)> = members
            .iter()
            .filter(|&&i| !instance.interval(i).is_trivial())
            .map(|&i| (i, instance.coefficient(i, realization.value(i))))
            .collect();
        order.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
        let mut acc = Rational::zero();
        for (i, a) in order {
            if acc >= demand[s] {
                break;
            }
            acc += &a;
            set.push(i);
        }
    }
    set.sort_unstable();
    Ok(OptResult { opt_size: set.len(), opt_set: set, node_count: 0, star: None })
}

/// Prefix `P*_S` used by [`exact_opt_disjoint`] for one set.
pub fn disjoint_prefix_len(instance: &Instance, realization: &Realization, s: usize) -> usize {
    let demand = effective_demands(instance, realization);
    let mut coeffs: Vec<Rational> = instance.sets()[s]
        .iter()
        .filter(|&&i| !instance.interval(i).is_trivial())
        .map(|&i| instance.coefficient(i, realization.value(i)))
        .collect();
    coeffs.sort_by(|a, b| b.cmp(a));
    let mut acc = Rational::zero();
    let mut k = 0;
    for a in coeffs {
        if acc >= demand[s] {
            break;
        }
        acc += a;
        k += 1;
    }
    k
}
