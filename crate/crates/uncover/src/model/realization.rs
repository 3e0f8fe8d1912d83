use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::instance::Instance;
use crate::error::{invalid, Result};
use crate::rational::Rational;

/// One draw of every hidden value of an instance (one value per interval).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    values: Vec<Rational>,
    set_values: Vec<Rational>,
    wstar: Option<Rational>,
}

/// Sidecar JSON form: `{"values": [...], "wstar": "..."}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealizationDoc {
    pub values: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wstar: Option<Rational>,
}

impl Realization {
    pub fn new(instance: &Instance, values: Vec<Rational>) -> Result<Self> {
        if values.len() != instance.n_intervals() {
            return Err(invalid(
                "values",
                format!("expected {} values, got {}", instance.n_intervals(), values.len()),
            ));
        }
        for (k, (v, iv)) in values.iter().zip(instance.intervals()).enumerate() {
            let ok = if iv.is_trivial() { *v == iv.lower } else { iv.lower < *v && *v < iv.upper };
            if !ok {
                return Err(invalid(
                    format!("values[{k}]"),
                    format!("{v} is not a possible value of ({}, {})", iv.lower, iv.upper),
                ));
            }
        }
        let (set_values, wstar) = if instance.is_minset_family() {
            let sv: Vec<Rational> =
                instance.sets().iter().map(|s| s.iter().map(|&i| &values[i]).sum()).collect();
            let w = sv.iter().min().cloned();
            (sv, w)
        } else {
            (Vec::new(), None)
        };
        Ok(Realization { values, set_values, wstar })
    }

    pub fn from_doc(instance: &Instance, doc: RealizationDoc) -> Result<Self> {
        let real = Realization::new(instance, doc.values)?;
        if let Some(w) = doc.wstar {
            if real.wstar.as_ref() != Some(&w) {
                return Err(invalid("wstar", format!("{w} differs from the minimum set value")));
            }
        }
        Ok(real)
    }

    pub fn to_doc(&self) -> RealizationDoc {
        RealizationDoc { values: self.values.clone(), wstar: self.wstar.clone() }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    /// `w(S)` for every set (MinSet kinds).
    pub fn set_values(&self) -> &[Rational] {
        &self.set_values
    }

    /// Minimum set value (MinSet kinds).
    pub fn wstar(&self) -> Option<&Rational> {
        self.wstar.as_ref()
    }
}

/// Draws every interval independently; deterministic in `seed`.
pub fn sample_realization(instance: &Instance, seed: u64) -> Realization {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let values = instance.intervals().iter().map(|iv| iv.sample(&mut rng)).collect();
    Realization::new(instance, values).expect("sampled values lie in their intervals")
}

/// Read access to hidden values that may or may not be known yet.
pub trait Reveal {
    fn revealed(&self, interval: usize) -> Option<&Rational>;
}

impl Reveal for Realization {
    fn revealed(&self, interval: usize) -> Option<&Rational> {
        self.values.get(interval)
    }
}
