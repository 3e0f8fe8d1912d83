use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::rational::Rational;

/// Resolution used when snapping continuous draws: values land on `L + (U-L)·k/2^32`.
pub const SAMPLE_BITS: u32 = 32;

/// Sampling law for the hidden value of an interval.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Distribution {
    Uniform,
    PointMass { value: Rational },
    TwoPoint { lo: Rational, p_lo: Rational, hi: Rational, p_hi: Rational },
    SymmetricTriangular,
}

/// An uncertainty interval `(lower, upper)`; trivial when the bounds coincide.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lower: Rational,
    pub upper: Rational,
    pub dist: Distribution,
}

impl Interval {
    pub fn new(lower: Rational, upper: Rational, dist: Distribution) -> Self {
        Interval { lower, upper, dist }
    }

    pub fn uniform(lower: Rational, upper: Rational) -> Self {
        Interval { lower, upper, dist: Distribution::Uniform }
    }

    pub fn trivial(value: Rational) -> Self {
        Interval { lower: value.clone(), upper: value.clone(), dist: Distribution::PointMass { value } }
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn is_trivial(&self) -> bool {
        self.lower == self.upper
    }

    pub fn center(&self) -> Rational {
        (&self.lower + &self.upper).half()
    }

    pub(crate) fn validate(&self, path: &str) -> Result<()> {
        if self.lower > self.upper {
            return Err(invalid(path, format!("lower {} exceeds upper {}", self.lower, self.upper)));
        }
        let inside = |v: &Rational| self.lower < *v && *v < self.upper;
        let dpath = format!("{path}.dist");
        if self.is_trivial() {
            return match &self.dist {
                Distribution::PointMass { value } if *value == self.lower => Ok(()),
                _ => Err(invalid(dpath, "a trivial interval needs a point mass at its bound")),
            };
        }
        match &self.dist {
            Distribution::Uniform | Distribution::SymmetricTriangular => Ok(()),
            Distribution::PointMass { value } => {
                if inside(value) {
                    Ok(())
                } else {
                    Err(invalid(dpath, format!("point mass {value} outside the open interval")))
                }
            }
            Distribution::TwoPoint { lo, p_lo, hi, p_hi } => {
                if !inside(lo) || !inside(hi) {
                    return Err(invalid(dpath, "two-point support outside the open interval"));
                }
                if lo > hi {
                    return Err(invalid(dpath, "two-point support must satisfy lo <= hi"));
                }
                let unit = Rational::zero()..=Rational::one();
                if !unit.contains(p_lo) || !unit.contains(p_hi) {
                    return Err(invalid(dpath, "probabilities must lie in [0, 1]"));
                }
                if p_lo + p_hi != Rational::one() {
                    return Err(invalid(dpath, "probabilities must sum to 1"));
                }
                Ok(())
            }
        }
    }

    /// `Pr[w >= center]`; 1 for trivial intervals.
    pub fn tau(&self) -> Rational {
        if self.is_trivial() {
            return Rational::one();
        }
        let c = self.center();
        match &self.dist {
            Distribution::Uniform | Distribution::SymmetricTriangular => Rational::frac(1, 2),
            Distribution::PointMass { value } => indicator(*value >= c),
            Distribution::TwoPoint { lo, p_lo, hi, p_hi } => {
                let mut t = Rational::zero();
                if *lo >= c {
                    t += p_lo;
                }
                if *hi >= c {
                    t += p_hi;
                }
                t
            }
        }
    }

    /// `Pr[w <= center]`; 1 for trivial intervals.
    pub fn tau_bar(&self) -> Rational {
        self.reflect().tau()
    }

    /// Whether the law is symmetric around the center.
    pub fn is_symmetric(&self) -> bool {
        if self.is_trivial() {
            return true;
        }
        match &self.dist {
            Distribution::Uniform | Distribution::SymmetricTriangular => true,
            Distribution::PointMass { value } => *value == self.center(),
            Distribution::TwoPoint { lo, p_lo, hi, p_hi } => {
                lo + hi == &self.lower + &self.upper && (p_lo == p_hi || lo == hi)
            }
        }
    }

    /// The interval `(-U, -L)` with the mirrored law.
    pub fn reflect(&self) -> Interval {
        let dist = match &self.dist {
            Distribution::Uniform => Distribution::Uniform,
            Distribution::SymmetricTriangular => Distribution::SymmetricTriangular,
            Distribution::PointMass { value } => Distribution::PointMass { value: -value },
            Distribution::TwoPoint { lo, p_lo, hi, p_hi } => Distribution::TwoPoint {
                lo: -hi,
                p_lo: p_hi.clone(),
                hi: -lo,
                p_hi: p_lo.clone(),
            },
        };
        Interval { lower: -&self.upper, upper: -&self.lower, dist }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Rational {
        if self.is_trivial() {
            return self.lower.clone();
        }
        let grid = 1u64 << SAMPLE_BITS;
        let at = |k: u64| &self.lower + self.width() * Rational::dyadic(k, SAMPLE_BITS);
        match &self.dist {
            Distribution::Uniform => at(rng.random_range(1..grid)),
            Distribution::SymmetricTriangular => {
                let u: f64 = rng.random();
                let x = if u < 0.5 { (u / 2.0).sqrt() } else { 1.0 - ((1.0 - u) / 2.0).sqrt() };
                let k = (x * grid as f64).round() as u64;
                at(k.clamp(1, grid - 1))
            }
            Distribution::PointMass { value } => value.clone(),
            Distribution::TwoPoint { lo, p_lo, hi, .. } => {
                let u = Rational::dyadic(rng.random_range(0..1u64 << 53), 53);
                if u < *p_lo {
                    lo.clone()
                } else {
                    hi.clone()
                }
            }
        }
    }
}

fn indicator(b: bool) -> Rational {
    if b {
        Rational::one()
    } else {
        Rational::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn two_point() -> Interval {
        Interval::new(
            r("0"),
            r("1"),
            Distribution::TwoPoint { lo: r("1/100"), p_lo: r("1/2"), hi: r("7/10"), p_hi: r("1/2") },
        )
    }

    #[test]
    fn tau_closed_forms() {
        assert_eq!(Interval::uniform(r("0"), r("3")).tau(), r("1/2"));
        assert_eq!(two_point().tau(), r("1/2"));
        let pm = Interval::new(r("0"), r("2"), Distribution::PointMass { value: r("1") });
        assert_eq!(pm.tau(), r("1"));
        assert_eq!(pm.tau_bar(), r("1"));
        let low = Interval::new(r("0"), r("2"), Distribution::PointMass { value: r("1/2") });
        assert_eq!(low.tau(), r("0"));
        assert_eq!(Interval::trivial(r("3")).tau(), r("1"));
    }

    #[test]
    fn reflection_is_an_involution() {
        let i = two_point();
        assert_eq!(i.reflect().reflect(), i);
        assert_eq!(i.reflect().tau(), i.tau_bar());
    }

    #[test]
    fn samples_stay_strictly_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let laws = [Distribution::Uniform, Distribution::SymmetricTriangular];
        for dist in laws {
            let i = Interval::new(r("1/3"), r("2/3"), dist);
            for _ in 0..2000 {
                let v = i.sample(&mut rng);
                assert!(i.lower < v && v < i.upper);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_laws() {
        let mut i = two_point();
        i.dist = Distribution::TwoPoint { lo: r("0"), p_lo: r("1/2"), hi: r("1/2"), p_hi: r("1/2") };
        assert!(i.validate("x").is_err());
        i.dist = Distribution::TwoPoint { lo: r("1/4"), p_lo: r("1/3"), hi: r("1/2"), p_hi: r("1/2") };
        assert!(i.validate("x").is_err());
        let t = Interval::new(r("1"), r("1"), Distribution::Uniform);
        assert!(t.validate("x").is_err());
        assert!(Interval::uniform(r("2"), r("1")).validate("x").is_err());
    }
}
