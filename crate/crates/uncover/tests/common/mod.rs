//! Independent oracles shared by the integration tests. Nothing here calls the library's
//! feasibility or optimisation code.

#![allow(dead_code)]

use uncover::model::{Instance, Kind, Realization};
use uncover::Rational;

/// Feasibility from first principles.
///
/// Selection: some set has all non-trivial members in `q`, and its value is at most every
/// other set's lower limit after `q`. Fixed demands: every constraint is met, or every unit
/// that could still add to it is already in `q`.
pub fn feasible(inst: &Instance, real: &Realization, q: &[usize]) -> bool {
    let mut in_q = vec![false; inst.n_units()];
    for &u in q {
        in_q[u] = true;
    }
    match inst.kind() {
        Kind::MinSet => {
            let sets = inst.sets();
            let lower = |s: &Vec<usize>| -> Rational {
                s.iter()
                    .map(|&i| if in_q[i] { real.value(i).clone() } else { inst.interval(i).lower.clone() })
                    .sum()
            };
            let lows: Vec<Rational> = sets.iter().map(lower).collect();
            sets.iter().enumerate().any(|(s, members)| {
                members.iter().all(|&i| in_q[i] || inst.interval(i).is_trivial()) && lows.iter().all(|l| *l >= lows[s])
            })
        }
        _ => {
            let mut got = vec![Rational::zero(); inst.n_constraints()];
            let mut open = vec![false; inst.n_constraints()];
            for (u, queried) in in_q.iter().enumerate() {
                for e in inst.entries(u) {
                    let a = inst.coefficient(e.interval, real.value(e.interval));
                    if *queried {
                        got[e.constraint] += a;
                    } else if a.is_positive() {
                        open[e.constraint] = true;
                    }
                }
            }
            (0..inst.n_constraints()).all(|c| got[c] >= inst.rhs()[c] || !open[c])
        }
    }
}

/// Every subset of `items`, smallest first.
pub fn subsets_by_size(items: &[usize]) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut all: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (0..n).filter(|b| mask >> b & 1 == 1).map(|b| items[b]).collect())
        .collect();
    all.sort_by_key(Vec::len);
    all
}

/// Smallest feasible query set by exhaustive enumeration over non-trivial units.
pub fn brute_opt(inst: &Instance, real: &Realization) -> usize {
    let units = inst.nontrivial_units();
    subsets_by_size(&units)
        .into_iter()
        .find(|q| feasible(inst, real, q))
        .map(|q| q.len())
        .expect("querying everything is feasible")
}

/// Minimum number of source sets covering the universe, by enumeration.
pub fn brute_setcover(universe: usize, sets: &[Vec<usize>]) -> Option<usize> {
    let idx: Vec<usize> = (0..sets.len()).collect();
    subsets_by_size(&idx).into_iter().find_map(|pick| {
        let mut hit = vec![false; universe];
        for &j in &pick {
            for &e in &sets[j] {
                hit[e] = true;
            }
        }
        hit.iter().all(|&h| h).then_some(pick.len())
    })
}

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}
