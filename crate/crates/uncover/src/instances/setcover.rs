use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::{Distribution, Instance, Interval, Realization};
use crate::rational::Rational;

/// A SetCover instance over the elements `0..universe`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetCoverSource {
    pub universe: usize,
    pub sets: Vec<Vec<usize>>,
}

impl SetCoverSource {
    pub fn validate(&self) -> Result<()> {
        if self.universe == 0 {
            return Err(invalid("universe", "the universe is empty"));
        }
        let mut covered = vec![false; self.universe];
        for (i, s) in self.sets.iter().enumerate() {
            for (j, &e) in s.iter().enumerate() {
                if e >= self.universe {
                    return Err(invalid(format!("sets[{i}][{j}]"), format!("element {e} out of range")));
                }
                covered[e] = true;
            }
        }
        if let Some(e) = covered.iter().position(|c| !c) {
            return Err(invalid("sets", format!("element {e} is not covered by any set")));
        }
        Ok(())
    }

    /// Classical greedy: repeatedly the set covering most uncovered elements, lowest index on ties.
    pub fn greedy(&self) -> Vec<usize> {
        let mut covered = vec![false; self.universe];
        let mut left = self.universe;
        let mut picked = Vec::new();
        while left > 0 {
            let gain = |s: &Vec<usize>| s.iter().filter(|&&e| !covered[e]).count();
            let (best, g) = self
                .sets
                .iter()
                .enumerate()
                .map(|(i, s)| (i, gain(s)))
                .fold((0, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if g == 0 {
                break;
            }
            for &e in &self.sets[best] {
                if !covered[e] {
                    covered[e] = true;
                    left -= 1;
                }
            }
            picked.push(best);
        }
        picked
    }
}

/// Encodes a SetCover source as a selection instance whose feasible query sets of size `k`
/// are exactly the covers of size `k`.
///
/// Interval 0 is the trivial `{w_r}` forming set 0. Source set `i` becomes interval `i+1`
/// `(0, w_r+δ)` with value `w_r+ε`, and element `j` becomes set `j+1` holding the intervals of the
/// source sets that contain `j`.
pub fn gen_setcover_reduction(
    source: &SetCoverSource,
    w_r: &Rational,
    delta: &Rational,
    eps: &Rational,
) -> Result<(Instance, Realization)> {
    source.validate()?;
    if !eps.is_positive() || eps >= delta {
        return Err(invalid("eps", "need 0 < eps < delta"));
    }
    if !w_r.is_positive() {
        return Err(invalid("w_r", "need w_r > 0"));
    }
    let hi = w_r + delta;
    let value = w_r + eps;
    let mut intervals = vec![Interval::trivial(w_r.clone())];
    for _ in &source.sets {
        intervals.push(Interval::new(Rational::zero(), hi.clone(), Distribution::PointMass { value: value.clone() }));
    }
    let mut sets = vec![vec![0]];
    for e in 0..source.universe {
        sets.push((0..source.sets.len()).filter(|&i| source.sets[i].contains(&e)).map(|i| i + 1).collect());
    }
    let inst = Instance::minset(intervals, sets)?;
    let mut values = vec![w_r.clone()];
    values.extend(std::iter::repeat_n(value, source.sets.len()));
    let real = Realization::new(&inst, values)?;
    Ok((inst, real))
}

pub fn default_reduction_params() -> (Rational, Rational, Rational) {
    (Rational::one(), Rational::frac(1, 10), Rational::frac(1, 100))
}
