use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::distribution::{Distribution, Interval};
use crate::error::{invalid, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    /// Find a minimum-value set and its value.
    #[serde(rename = "minset")]
    MinSet,
    /// Covering with fixed per-set right-hand sides and coefficients `w_i - L_i`.
    #[serde(rename = "minset_detrhs")]
    MinSetDetRhs,
    /// Multiset multicover: units are multisets, constraints are elements.
    #[serde(rename = "mincover")]
    MinCover,
}

/// One coefficient slot of a unit: the constraint it contributes to and the interval holding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Entry {
    pub constraint: usize,
    pub interval: usize,
}

/// A validated problem instance.
///
/// For the MinSet kinds `sets` is the set family over interval indices and every
/// interval is a queryable unit. For [`Kind::MinCover`] each entry of `sets` is a
/// multiset listing the coefficient intervals it owns, `elements[k]` names the
/// element covered by coefficient interval `k`, and `rhs` holds one demand per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    kind: Kind,
    intervals: Vec<Interval>,
    sets: Vec<Vec<usize>>,
    rhs: Vec<Rational>,
    elements: Vec<usize>,
    units: Vec<Vec<Entry>>,
    constraint_units: Vec<Vec<usize>>,
}

impl Instance {
    pub fn minset(intervals: Vec<Interval>, sets: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(Kind::MinSet, intervals, sets, Vec::new(), Vec::new())
    }

    pub fn detrhs(intervals: Vec<Interval>, sets: Vec<Vec<usize>>, rhs: Vec<Rational>) -> Result<Self> {
        Self::build(Kind::MinSetDetRhs, intervals, sets, rhs, Vec::new())
    }

    pub fn mincover(
        intervals: Vec<Interval>,
        multisets: Vec<Vec<usize>>,
        elements: Vec<usize>,
        rhs: Vec<Rational>,
    ) -> Result<Self> {
        Self::build(Kind::MinCover, intervals, multisets, rhs, elements)
    }

    fn build(
        kind: Kind,
        intervals: Vec<Interval>,
        sets: Vec<Vec<usize>>,
        rhs: Vec<Rational>,
        elements: Vec<usize>,
    ) -> Result<Self> {
        if intervals.is_empty() {
            return Err(invalid("intervals", "at least one interval is required"));
        }
        for (i, iv) in intervals.iter().enumerate() {
            iv.validate(&format!("intervals[{i}]"))?;
        }
        if sets.is_empty() {
            return Err(invalid("sets", "at least one set is required"));
        }
        let n = intervals.len();
        for (s, members) in sets.iter().enumerate() {
            if members.is_empty() {
                return Err(invalid(format!("sets[{s}]"), "sets must be non-empty"));
            }
            let mut seen = vec![false; n];
            for (j, &i) in members.iter().enumerate() {
                if i >= n {
                    return Err(invalid(format!("sets[{s}][{j}]"), format!("interval index {i} out of range")));
                }
                if seen[i] {
                    return Err(invalid(format!("sets[{s}][{j}]"), format!("interval {i} listed twice")));
                }
                seen[i] = true;
            }
        }
        let (units, constraint_units) = match kind {
            Kind::MinSet | Kind::MinSetDetRhs => {
                if kind == Kind::MinSet && !rhs.is_empty() {
                    return Err(invalid("rhs", "a plain minset instance takes no right-hand sides"));
                }
                if kind == Kind::MinSetDetRhs && rhs.len() != sets.len() {
                    return Err(invalid("rhs", format!("expected {} right-hand sides, got {}", sets.len(), rhs.len())));
                }
                if !elements.is_empty() {
                    return Err(invalid("elements", "only mincover instances map intervals to elements"));
                }
                let mut units = vec![Vec::new(); n];
                for (s, members) in sets.iter().enumerate() {
                    for &i in members {
                        units[i].push(Entry { constraint: s, interval: i });
                    }
                }
                (units, sets.clone())
            }
            Kind::MinCover => {
                if elements.len() != n {
                    return Err(invalid("elements", format!("expected one element per interval ({n}), got {}", elements.len())));
                }
                if rhs.is_empty() {
                    return Err(invalid("rhs", "mincover needs one demand per element"));
                }
                let mut owner = vec![None; n];
                let mut units = Vec::with_capacity(sets.len());
                let mut constraint_units = vec![Vec::new(); rhs.len()];
                for (m, members) in sets.iter().enumerate() {
                    let mut covered = vec![false; rhs.len()];
                    let mut entries = Vec::with_capacity(members.len());
                    for (j, &k) in members.iter().enumerate() {
                        let path = format!("sets[{m}][{j}]");
                        if owner[k].is_some() {
                            return Err(invalid(path, format!("coefficient interval {k} belongs to two multisets")));
                        }
                        owner[k] = Some(m);
                        let e = elements[k];
                        if e >= rhs.len() {
                            return Err(invalid(format!("elements[{k}]"), format!("element {e} out of range")));
                        }
                        if covered[e] {
                            return Err(invalid(path, format!("multiset {m} has two coefficients for element {e}")));
                        }
                        covered[e] = true;
                        if intervals[k].lower.is_negative() {
                            return Err(invalid(format!("intervals[{k}].lower"), "coefficients must be non-negative"));
                        }
                        entries.push(Entry { constraint: e, interval: k });
                        constraint_units[e].push(m);
                    }
                    units.push(entries);
                }
                if let Some(k) = owner.iter().position(Option::is_none) {
                    return Err(invalid(format!("intervals[{k}]"), "coefficient interval not owned by any multiset"));
                }
                (units, constraint_units)
            }
        };
        Ok(Instance { kind, intervals, sets, rhs, elements, units, constraint_units })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn is_minset_family(&self) -> bool {
        matches!(self.kind, Kind::MinSet | Kind::MinSetDetRhs)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn interval(&self, k: usize) -> &Interval {
        &self.intervals[k]
    }

    /// Set family (MinSet kinds) or multisets (MinCover).
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// Fixed right-hand sides; empty for [`Kind::MinSet`].
    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Element of each coefficient interval; empty unless MinCover.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn n_intervals(&self) -> usize {
        self.intervals.len()
    }

    pub fn n_units(&self) -> usize {
        self.units.len()
    }

    pub fn n_constraints(&self) -> usize {
        self.constraint_units.len()
    }

    pub fn entries(&self, unit: usize) -> &[Entry] {
        &self.units[unit]
    }

    /// Units with at least one coefficient slot in constraint `c`.
    pub fn constraint_units(&self, c: usize) -> &[usize] {
        &self.constraint_units[c]
    }

    /// Intervals revealed by querying `unit`.
    pub fn unit_intervals(&self, unit: usize) -> Vec<usize> {
        match self.kind {
            Kind::MinCover => self.sets[unit].clone(),
            _ => vec![unit],
        }
    }

    /// A unit whose every coefficient is known to be zero; never worth querying.
    pub fn unit_is_trivial(&self, unit: usize) -> bool {
        match self.kind {
            Kind::MinCover => self.sets[unit].iter().all(|&k| self.intervals[k].upper.is_zero()),
            _ => self.intervals[unit].is_trivial(),
        }
    }

    pub fn nontrivial_units(&self) -> Vec<usize> {
        (0..self.n_units()).filter(|&u| !self.unit_is_trivial(u)).collect()
    }

    /// Coefficient contributed by interval `k` when its value is `value`.
    pub fn coefficient(&self, k: usize, value: &Rational) -> Rational {
        match self.kind {
            Kind::MinCover => value.clone(),
            _ => value - &self.intervals[k].lower,
        }
    }

    /// Largest coefficient interval `k` can contribute.
    pub fn cap(&self, k: usize) -> Rational {
        match self.kind {
            Kind::MinCover => self.intervals[k].upper.clone(),
            _ => self.intervals[k].width(),
        }
    }

    /// Initial lower limit `L_S` of a set (MinSet kinds).
    pub fn set_lower(&self, s: usize) -> Rational {
        self.sets[s].iter().map(|&i| &self.intervals[i].lower).sum()
    }

    /// Initial upper limit `U_S` of a set (MinSet kinds).
    pub fn set_upper(&self, s: usize) -> Rational {
        self.sets[s].iter().map(|&i| &self.intervals[i].upper).sum()
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = vec![false; self.intervals.len()];
        for members in &self.sets {
            for &i in members {
                if seen[i] {
                    return false;
                }
                seen[i] = true;
            }
        }
        true
    }

    /// The same interval system with fixed right-hand sides.
    pub fn with_rhs(&self, rhs: Vec<Rational>) -> Result<Instance> {
        if !self.is_minset_family() {
            return Err(crate::error::contract("with_rhs needs a minset-family instance"));
        }
        Instance::detrhs(self.intervals.clone(), self.sets.clone(), rhs)
    }

    /// The same interval system read as a plain selection instance.
    pub fn as_minset(&self) -> Result<Instance> {
        if !self.is_minset_family() {
            return Err(crate::error::contract("as_minset needs a minset-family instance"));
        }
        Instance::minset(self.intervals.clone(), self.sets.clone())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalDoc {
    lower: Rational,
    upper: Rational,
    #[serde(default)]
    dist: Option<Distribution>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceDoc {
    kind: Kind,
    intervals: Vec<IntervalDoc>,
    sets: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rhs: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<usize>>,
}

impl Serialize for Instance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let doc = InstanceDoc {
            kind: self.kind,
            intervals: self
                .intervals
                .iter()
                .map(|iv| IntervalDoc { lower: iv.lower.clone(), upper: iv.upper.clone(), dist: Some(iv.dist.clone()) })
                .collect(),
            sets: self.sets.clone(),
            rhs: (self.kind != Kind::MinSet).then(|| self.rhs.clone()),
            elements: (self.kind == Kind::MinCover).then(|| self.elements.clone()),
        };
        doc.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Instance {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = InstanceDoc::deserialize(d)?;
        let intervals = doc
            .intervals
            .into_iter()
            .map(|iv| {
                let dist = iv.dist.unwrap_or_else(|| {
                    if iv.lower == iv.upper {
                        Distribution::PointMass { value: iv.lower.clone() }
                    } else {
                        Distribution::Uniform
                    }
                });
                Interval { lower: iv.lower, upper: iv.upper, dist }
            })
            .collect();
        Instance::build(doc.kind, intervals, doc.sets, doc.rhs.unwrap_or_default(), doc.elements.unwrap_or_default())
            .map_err(serde::de::Error::custom)
    }
}
