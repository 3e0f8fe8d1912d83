use super::exact::{coefficient_rows, effective_demands};
use crate::error::{Error, Result};
use crate::model::{Instance, QueryState, Realization};
use crate::rational::Rational;

/// Covering-program reading of feasibility: every constraint's queried coefficients reach its
/// demand (`w* − L_S` for plain MinSet, the capped right-hand side otherwise).
pub fn ilp_feasible(instance: &Instance, realization: &Realization, q: &[usize]) -> bool {
    let rows = coefficient_rows(instance, realization);
    let mut acc = vec![Rational::zero(); instance.n_constraints()];
    for &u in q {
        for (c, a) in &rows[u] {
            acc[*c] += a;
        }
    }
    effective_demands(instance, realization).iter().zip(&acc).all(|(b, s)| s >= b)
}

/// Whether `q` solves the instance, checked both structurally and through the covering
/// program. The two must agree.
pub fn check_feasible(instance: &Instance, realization: &Realization, q: &[usize]) -> Result<bool> {
    let structural = QueryState::with_queries(instance, realization, q)?.is_solved();
    let ilp = ilp_feasible(instance, realization, q);
    if structural != ilp {
        return Err(Error::Invariant(format!(
            "structural feasibility {structural} disagrees with covering feasibility {ilp} for {q:?}"
        )));
    }
    Ok(structural)
}
