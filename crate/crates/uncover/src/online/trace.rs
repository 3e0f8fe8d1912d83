use serde::{Deserialize, Serialize};

use crate::covering::GreedyKind;
use crate::rational::Rational;

/// Ordered queries of one run, grouped into outer iterations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: String,
    pub seed: Option<u64>,
    pub queries: Vec<usize>,
    pub iterations: Vec<Iteration>,
    /// Fixed right-hand sides were left unsatisfied after exhausting every useful unit.
    #[serde(default)]
    pub infeasible: bool,
}

/// One execution of the outermost loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Iteration {
    pub index: usize,
    /// `|Q_j|`: queries made before this iteration started.
    pub prefix_size: usize,
    /// `G_j`.
    pub queries: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub greedy: Option<GreedyKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_set: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub phases: Vec<Phase>,
}

/// One pass of the `for g in [ogc, ogs]` loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phase {
    pub greedy: GreedyKind,
    /// Inner-while iterations.
    pub rounds: Vec<Round>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub steps: Vec<Step>,
}

/// One query inside a repeat loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub unit: usize,
    /// Hypothesized minimum value the unit was selected at.
    pub w: Rational,
    /// Threshold after the recomputation that follows the query.
    pub d: Rational,
    /// The revealed value cleared half the width.
    pub half: bool,
    /// Snapshot of the half-width queries of this phase.
    pub q_half: Vec<usize>,
}

impl RunTrace {
    pub fn new(algorithm: impl Into<String>) -> Self {
        RunTrace { algorithm: algorithm.into(), seed: None, queries: Vec::new(), iterations: Vec::new(), infeasible: false }
    }

    /// `X`: total number of queries.
    pub fn total(&self) -> usize {
        self.queries.len()
    }

    /// Opens a new outer iteration starting at the current prefix.
    pub(crate) fn begin(&mut self) -> &mut Iteration {
        let index = self.iterations.len();
        self.iterations.push(Iteration {
            index,
            prefix_size: self.queries.len(),
            queries: Vec::new(),
            greedy: None,
            target_set: None,
            phases: Vec::new(),
        });
        self.iterations.last_mut().expect("just pushed")
    }

    pub(crate) fn record(&mut self, unit: usize) {
        self.queries.push(unit);
        self.iterations.last_mut().expect("an open iteration").queries.push(unit);
    }

    /// Drops a trailing iteration that made no query.
    pub(crate) fn close(&mut self) {
        if self.iterations.last().is_some_and(|it| it.queries.is_empty()) {
            self.iterations.pop();
        }
    }

    /// Iterations partition the query list in order and no unit repeats.
    pub fn is_consistent(&self) -> bool {
        let mut pos = 0;
        for it in &self.iterations {
            if it.prefix_size != pos || self.queries.get(pos..pos + it.queries.len()) != Some(&it.queries[..]) {
                return false;
            }
            pos += it.queries.len();
        }
        let mut seen = std::collections::HashSet::new();
        pos == self.queries.len() && self.queries.iter().all(|u| seen.insert(*u))
    }
}
