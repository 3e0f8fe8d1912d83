//! Exact search for the smallest hypothesized `w` at which some unit's optimistic greedy value
//! reaches a threshold.

use super::{Coverage, CoveringView, GreedyKind};
use crate::rational::Rational;

/// Offset used when the smallest admissible `w` is the open end of a step: the search returns
/// a point this far (or half the step length, if shorter) to the right of the breakpoint.
pub const SEARCH_RESOLUTION: u32 = 40;

/// Upper end of a search range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Closed(Rational),
    Open(Rational),
}

impl Bound {
    pub fn value(&self) -> &Rational {
        match self {
            Bound::Closed(v) | Bound::Open(v) => v,
        }
    }

    pub fn admits(&self, w: &Rational) -> bool {
        match self {
            Bound::Closed(v) => w <= v,
            Bound::Open(v) => w < v,
        }
    }
}

impl CoveringView<'_> {
    /// Smallest `w ∈ [lo, hi]` with `max_h og(Q, h, w) ≥ d` over `candidates`, and the unit
    /// attaining the maximum there. `None` if no such `w` exists.
    ///
    /// Every unit's optimistic value is piecewise linear (gc) or piecewise constant (gs) in `w`
    /// with breakpoints where a constraint becomes active and where its residual reaches the
    /// unit's cap; pieces are scanned in order and solved exactly.
    pub fn min_w_reaching(
        &self,
        kind: GreedyKind,
        cov: &Coverage,
        candidates: &[usize],
        d: &Rational,
        lo: &Rational,
        hi: &Bound,
    ) -> Option<(Rational, usize)> {
        assert!(self.is_parametric(), "search needs parametric demands");
        if !hi.admits(lo) {
            return None;
        }
        let w = candidates.iter().filter_map(|&h| self.crossing(kind, cov, h, d, lo, hi)).min()?;
        let (unit, _) = self.best_optimistic(kind, cov, candidates, Some(&w))?;
        Some((w, unit))
    }

    fn crossing(
        &self,
        kind: GreedyKind,
        cov: &Coverage,
        unit: usize,
        d: &Rational,
        lo: &Rational,
        hi: &Bound,
    ) -> Option<Rational> {
        let inst = self.instance();
        let mut pts = vec![lo.clone()];
        for e in inst.entries(unit) {
            let t = self.activation_point(cov, e.constraint);
            let t2 = &t + self.cap(e.interval) / self.gamma();
            for p in [t, t2] {
                if p > *lo && hi.admits(&p) {
                    pts.push(p);
                }
            }
        }
        if let Bound::Closed(v) = hi {
            pts.push(v.clone());
        }
        pts.sort();
        pts.dedup();
        let f = |w: &Rational| self.optimistic_value(kind, cov, unit, Some(w));
        for k in 0..pts.len() {
            let p = &pts[k];
            let fp = f(p);
            if fp >= *d {
                return Some(p.clone());
            }
            let next = match (pts.get(k + 1), hi) {
                (Some(q), _) => q.clone(),
                (None, Bound::Open(v)) if v > p => v.clone(),
                _ => break,
            };
            match kind {
                GreedyKind::Gc => {
                    let fnext = f(&next);
                    if fnext >= *d && fnext > fp {
                        let w = p + (d - &fp) * (&next - p) / (fnext - &fp);
                        if w < next {
                            return Some(w);
                        }
                    }
                }
                GreedyKind::Gs => {
                    let mid = (p + &next).half();
                    if f(&mid) >= *d {
                        let step = Rational::dyadic(1, SEARCH_RESOLUTION);
                        let gap = (&next - p).half();
                        return Some(p + if step < gap { step } else { gap });
                    }
                }
            }
        }
        None
    }
}
