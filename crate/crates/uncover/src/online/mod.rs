//! Online query strategies. Each run owns a [`QueryState`] and records a [`RunTrace`].

mod trace;

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use trace::{Iteration, Phase, Round, RunTrace, Step};

use crate::covering::{online_gamma, Bound, Coverage, CoveringView, GreedyKind};
use crate::error::{contract, Error, Result};
use crate::model::{Instance, Kind, QueryState, Realization};
use crate::rational::Rational;

/// Baseline query orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    /// Every non-trivial unit in index order.
    QueryAll,
    /// A seeded shuffle, until solved.
    RandomOrder(u64),
    /// Largest total cap first, until solved.
    WidthOrder,
}

/// Algorithm identifier as used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Algorithm {
    Disjoint,
    DetRhs,
    MinCover,
    MinSet,
    Baseline(Policy),
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Disjoint => f.write_str("disjoint"),
            Algorithm::DetRhs => f.write_str("detrhs"),
            Algorithm::MinCover => f.write_str("mincover"),
            Algorithm::MinSet => f.write_str("minset"),
            Algorithm::Baseline(Policy::QueryAll) => f.write_str("baseline:all"),
            Algorithm::Baseline(Policy::WidthOrder) => f.write_str("baseline:width"),
            Algorithm::Baseline(Policy::RandomOrder(s)) => write!(f, "baseline:random:{s}"),
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Unsupported(format!("unknown algorithm {s:?}"));
        Ok(match s {
            "disjoint" => Algorithm::Disjoint,
            "detrhs" => Algorithm::DetRhs,
            "mincover" => Algorithm::MinCover,
            "minset" => Algorithm::MinSet,
            "baseline:all" => Algorithm::Baseline(Policy::QueryAll),
            "baseline:width" => Algorithm::Baseline(Policy::WidthOrder),
            "baseline:random" => Algorithm::Baseline(Policy::RandomOrder(0)),
            _ => match s.strip_prefix("baseline:random:") {
                Some(seed) => Algorithm::Baseline(Policy::RandomOrder(seed.parse().map_err(|_| bad())?)),
                None => return Err(bad()),
            },
        })
    }
}

impl From<Algorithm> for String {
    fn from(a: Algorithm) -> String {
        a.to_string()
    }
}

impl TryFrom<String> for Algorithm {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Runs `algorithm` on one realization. For the random baseline the shuffle seed is the
/// policy seed plus `seed`.
pub fn run(algorithm: Algorithm, instance: &Instance, realization: &Realization, seed: Option<u64>) -> Result<RunTrace> {
    let mut trace = match algorithm {
        Algorithm::Disjoint => run_disjoint(instance, realization)?,
        Algorithm::DetRhs => run_detrhs(instance, realization)?,
        Algorithm::MinCover => run_mincover(instance, realization)?,
        Algorithm::MinSet => run_minset(instance, realization)?,
        Algorithm::Baseline(Policy::RandomOrder(s)) => {
            let policy = Policy::RandomOrder(s.wrapping_add(seed.unwrap_or(0)));
            run_baseline(instance, realization, policy)?
        }
        Algorithm::Baseline(p) => run_baseline(instance, realization, p)?,
    };
    trace.algorithm = algorithm.to_string();
    trace.seed = seed;
    Ok(trace)
}

fn is_half(instance: &Instance, realization: &Realization, unit: usize) -> bool {
    instance.unit_intervals(unit).into_iter().all(|k| {
        let iv = instance.interval(k);
        Rational::integer(2) * (realization.value(k) - &iv.lower) >= iv.width()
    })
}

/// Pairwise-disjoint sets: repeatedly take the set with the smallest lower limit and query its
/// widest unqueried members until one clears half its width or the set is fully revealed.
pub fn run_disjoint(instance: &Instance, realization: &Realization) -> Result<RunTrace> {
    if instance.kind() != Kind::MinSet || !instance.is_disjoint() {
        return Err(contract("run_disjoint needs a minset instance with pairwise-disjoint sets"));
    }
    let mut st = QueryState::new(instance, realization)?;
    let mut trace = RunTrace::new("disjoint");
    while !st.is_solved_minset()? {
        let lowers = st.lowers();
        let target = (0..lowers.len()).min_by(|&a, &b| lowers[a].cmp(&lowers[b])).expect("non-empty family");
        trace.begin().target_set = Some(target);
        loop {
            let pick = instance.sets()[target]
                .iter()
                .copied()
                .filter(|&i| !st.is_queried(i) && !instance.interval(i).is_trivial())
                .min_by(|&a, &b| instance.interval(b).width().cmp(&instance.interval(a).width()).then(a.cmp(&b)));
            let Some(i) = pick else {
                return Err(Error::Invariant(format!("set {target} is the minimum but has nothing left to query")));
            };
            st.query(i)?;
            trace.record(i);
            if is_half(instance, realization, i) || st.set_revealed(target) || st.is_solved_minset()? {
                break;
            }
        }
    }
    trace.close();
    Ok(trace)
}

#[derive(Clone, Copy)]
enum StopRule {
    HalfWidth,
    HalfGreedy,
}

/// Fixed right-hand sides with one interval per unit, stopping each repeat loop at the first
/// query that clears half its width.
pub fn run_detrhs(instance: &Instance, realization: &Realization) -> Result<RunTrace> {
    if instance.kind() != Kind::MinSetDetRhs {
        return Err(contract("run_detrhs needs a minset_detrhs instance"));
    }
    run_fixed(instance, realization, StopRule::HalfWidth, "detrhs")
}

/// Multiset multicover, stopping each repeat loop once the real greedy value of the last
/// multiset reaches half its optimistic value.
pub fn run_mincover(instance: &Instance, realization: &Realization) -> Result<RunTrace> {
    if instance.kind() != Kind::MinCover {
        return Err(contract("run_mincover needs a mincover instance"));
    }
    run_fixed(instance, realization, StopRule::HalfGreedy, "mincover")
}

fn run_fixed(instance: &Instance, realization: &Realization, rule: StopRule, name: &str) -> Result<RunTrace> {
    let mut st = QueryState::new(instance, realization)?;
    let mut trace = RunTrace::new(name);
    if st.is_solved() {
        return Ok(trace);
    }
    let view = CoveringView::with_rhs(instance, online_gamma(instance)?, instance.rhs());
    let mut cov = view.empty();
    while !st.is_solved() {
        let kind = if view.total_residual(&cov, None) >= Rational::one() { GreedyKind::Gc } else { GreedyKind::Gs };
        trace.begin().greedy = Some(kind);
        loop {
            let (u, og) = view
                .best_optimistic(kind, &cov, &st.candidates(), None)
                .ok_or_else(|| Error::Invariant("unsolved with no candidate left".into()))?;
            if !og.is_positive() {
                return Err(Error::Invariant(format!("no candidate has a positive optimistic {kind:?} value")));
            }
            st.query(u)?;
            trace.record(u);
            let before = cov.clone();
            view.add(&mut cov, u, &st)?;
            let stop = match rule {
                StopRule::HalfWidth => is_half(instance, realization, u),
                StopRule::HalfGreedy => Rational::integer(2) * view.difference(kind, &before, &cov, None) >= og,
            };
            if stop || st.is_solved() {
                break;
            }
        }
    }
    trace.infeasible = st.is_infeasible_end();
    trace.close();
    Ok(trace)
}

/// `min_S L_S(Q)`.
fn w_min(st: &QueryState) -> Rational {
    st.lowers().iter().min().cloned().expect("non-empty family")
}

/// General set families. Alternates a residual-cover phase and a constraint-count phase; each
/// phase repeatedly finds the smallest hypothesized `w*` at which some unit's optimistic value
/// reaches the threshold `d` and queries the best unit there.
pub fn run_minset(instance: &Instance, realization: &Realization) -> Result<RunTrace> {
    if instance.kind() != Kind::MinSet {
        return Err(contract("run_minset needs a minset instance"));
    }
    let mut st = QueryState::new(instance, realization)?;
    let mut trace = RunTrace::new("minset");
    if st.is_solved_minset()? {
        return Ok(trace);
    }
    let view = CoveringView::parametric(instance, online_gamma(instance)?);
    let mut cov = view.empty();
    while !st.is_solved_minset()? {
        trace.begin();
        let start = trace.total();
        let mut phases = Vec::new();
        for kind in [GreedyKind::Gc, GreedyKind::Gs] {
            if st.is_solved_minset()? {
                break;
            }
            let phase = minset_phase(&view, kind, &mut st, &mut cov, &mut trace)?;
            phases.push(phase);
        }
        if trace.total() == start {
            return Err(Error::Invariant("an outer iteration made no query on an unsolved instance".into()));
        }
        trace.iterations.last_mut().expect("open iteration").phases = phases;
    }
    trace.close();
    Ok(trace)
}

fn minset_phase(
    view: &CoveringView,
    kind: GreedyKind,
    st: &mut QueryState,
    cov: &mut Coverage,
    trace: &mut RunTrace,
) -> Result<Phase> {
    let instance = view.instance();
    let mut phase = Phase { greedy: kind, rounds: Vec::new() };
    let mut d = Rational::one();
    let base = cov.clone();
    let base_len = st.len();
    let gs_hi = match kind {
        GreedyKind::Gs => {
            let step = view.gamma().recip();
            Some(Bound::Open(st.lowers().iter().map(|l| l + &step).min().expect("non-empty family")))
        }
        GreedyKind::Gc => None,
    };
    let hi = |st: &QueryState| match &gs_hi {
        Some(b) => b.clone(),
        None => Bound::Closed(st.uppers().iter().min().cloned().expect("non-empty family")),
    };
    let search = |st: &QueryState, cov: &Coverage, d: &Rational| {
        view.min_w_reaching(kind, cov, &st.candidates(), d, &w_min(st), &hi(st))
    };
    while let Some((mut w, mut u)) = search(st, cov, &d) {
        let mut round = Round { steps: Vec::new() };
        loop {
            st.query(u)?;
            trace.record(u);
            view.add(cov, u, &*st)?;
            let half = is_half(instance, st.realization(), u);
            let q_half: Vec<usize> =
                st.queries()[base_len..].iter().copied().filter(|&h| is_half(instance, st.realization(), h)).collect();
            if !q_half.is_empty() {
                d = view.greedy_value(kind, &base, &q_half, &*st, Some(&w))?;
            }
            round.steps.push(Step { unit: u, w: w.clone(), d: d.clone(), half, q_half });
            if half || st.is_solved_minset()? {
                break;
            }
            match search(st, cov, &d) {
                Some((w2, u2)) => (w, u) = (w2, u2),
                None => break,
            }
        }
        phase.rounds.push(round);
        if st.is_solved_minset()? {
            break;
        }
    }
    Ok(phase)
}

/// Baseline orders, recorded as a single iteration.
pub fn run_baseline(instance: &Instance, realization: &Realization, policy: Policy) -> Result<RunTrace> {
    let mut st = QueryState::new(instance, realization)?;
    let name = Algorithm::Baseline(policy).to_string();
    let mut trace = RunTrace::new(name);
    if st.is_solved() {
        return Ok(trace);
    }
    let mut order = instance.nontrivial_units();
    match policy {
        Policy::QueryAll => {}
        Policy::RandomOrder(seed) => order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
        Policy::WidthOrder => {
            let caps: Vec<Rational> =
                (0..instance.n_units()).map(|u| instance.unit_intervals(u).into_iter().map(|k| instance.cap(k)).sum()).collect();
            order.sort_by(|&a, &b| caps[b].cmp(&caps[a]).then(a.cmp(&b)));
        }
    }
    trace.begin();
    for u in order {
        if policy != Policy::QueryAll && st.is_solved() {
            break;
        }
        st.query(u)?;
        trace.record(u);
    }
    trace.infeasible = st.is_infeasible_end();
    trace.close();
    Ok(trace)
}
