//! The maximization variant and its reflection onto MinSet.

use super::instance::Instance;
use super::realization::Realization;
use crate::error::{contract, Result};
use crate::rational::Rational;

/// Maps every interval to `(-U, -L)` and every value to `-w`.
pub fn reflect_maxset(instance: &Instance, realization: &Realization) -> Result<(Instance, Realization)> {
    if instance.kind() != super::Kind::MinSet {
        return Err(contract("reflection is defined for plain minset instances"));
    }
    let intervals = instance.intervals().iter().map(|iv| iv.reflect()).collect();
    let reflected = Instance::minset(intervals, instance.sets().to_vec())?;
    let values = realization.values().iter().map(|v| -v).collect();
    let real = Realization::new(&reflected, values)?;
    Ok((reflected, real))
}

/// Whether `q` certifies a maximum-value set and its value: some set of maximum value has all
/// non-trivial members in `q` and every set's upper limit after `q` is at most that value.
pub fn is_feasible_maxset(instance: &Instance, realization: &Realization, q: &[usize]) -> bool {
    let mut in_q = vec![false; instance.n_intervals()];
    for &i in q {
        in_q[i] = true;
    }
    let upper = |s: &Vec<usize>| -> Rational {
        s.iter().map(|&i| if in_q[i] { realization.value(i).clone() } else { instance.interval(i).upper.clone() }).sum()
    };
    let uppers: Vec<Rational> = instance.sets().iter().map(upper).collect();
    let wmax = realization.set_values().iter().max().expect("non-empty family");
    instance.sets().iter().enumerate().any(|(s, members)| {
        realization.set_values()[s] == *wmax
            && members.iter().all(|&i| in_q[i] || instance.interval(i).is_trivial())
            && uppers.iter().all(|u| u <= wmax)
    })
}
