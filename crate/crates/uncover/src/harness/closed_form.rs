use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::GeneratorParams;
use crate::rational::Rational;

/// Exact expectations for the lower-bound constructions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    pub expected_opt: Rational,
    pub variance_opt: Rational,
    /// Cost of querying the large set in index order until its lower limit reaches the
    /// trivial set's value, or every interval is revealed.
    pub expected_index_cost: Rational,
    pub variance_index_cost: Rational,
}

fn threshold() -> Rational {
    Rational::frac(13, 20)
}

/// Distribution of the index-order stopping time: a walk over revealed prefix sums.
fn index_cost(laws: &[Vec<(Rational, Rational)>]) -> (Rational, Rational) {
    let n = laws.len();
    let mut alive: BTreeMap<Rational, Rational> = BTreeMap::from([(Rational::zero(), Rational::one())]);
    let mut mean = Rational::zero();
    let mut second = Rational::zero();
    for (k, law) in laws.iter().enumerate() {
        let cost = Rational::from(k + 1);
        let mut next: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (sum, p) in &alive {
            for (v, q) in law {
                let s = sum + v;
                let pq = p * q;
                if s >= threshold() || k + 1 == n {
                    mean += &pq * &cost;
                    second += &pq * &cost * &cost;
                } else {
                    *next.entry(s).or_default() += pq;
                }
            }
        }
        alive = next;
    }
    let variance = &second - &mean * &mean;
    (mean, variance)
}

fn two_point(eps: &Rational, tau: &Rational, hi: Rational) -> Vec<(Rational, Rational)> {
    vec![(eps.clone(), Rational::one() - tau), (hi, tau.clone())]
}

/// Expected optimum and index-order cost of the two lower-bound families.
pub fn closed_form_expectations(family: &GeneratorParams) -> Result<ClosedForm> {
    match family {
        GeneratorParams::Thm21 { n, tau, eps } => {
            family.generate()?;
            let laws = vec![two_point(eps, tau, Rational::frac(7, 10)); *n];
            let (expected_index_cost, variance_index_cost) = index_cost(&laws);
            let all_low = (Rational::one() - tau).pow(*n as u32);
            let nf = Rational::from(*n);
            let opt_all_low = if &nf * eps < threshold() { nf } else { Rational::from_bigs((threshold() / eps).ceil(), 1.into()) };
            let expected_opt = (Rational::one() - &all_low) + &all_low * &opt_all_low;
            let second = (Rational::one() - &all_low) + &all_low * &opt_all_low * &opt_all_low;
            let variance_opt = second - &expected_opt * &expected_opt;
            Ok(ClosedForm { expected_opt, variance_opt, expected_index_cost, variance_index_cost })
        }
        GeneratorParams::Thm22 { n, tau, eps } => {
            family.generate()?;
            let mut laws = vec![two_point(eps, tau, Rational::frac(51, 100)); n - 1];
            laws.push(vec![(Rational::frac(7, 10), Rational::one())]);
            let (expected_index_cost, variance_index_cost) = index_cost(&laws);
            Ok(ClosedForm {
                expected_opt: Rational::one(),
                variance_opt: Rational::zero(),
                expected_index_cost,
                variance_index_cost,
            })
        }
        _ => Err(Error::Unsupported("closed forms exist only for the thm21 and thm22 families".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::r;

    fn thm21(n: usize, tau: &str) -> GeneratorParams {
        GeneratorParams::Thm21 { n, tau: r(tau), eps: r("1/100") }
    }

    #[test]
    fn thm21_small_cases() {
        assert_eq!(closed_form_expectations(&thm21(4, "1/2")).unwrap().expected_opt, r("19/16"));
        let full = closed_form_expectations(&thm21(5, "1")).unwrap();
        assert_eq!(full.expected_opt, r("1"));
        assert_eq!(full.expected_index_cost, r("1"));
        assert_eq!(full.variance_opt, r("0"));
        // n = 2: first draw high w.p. 1/2 (cost 1), otherwise cost 2.
        assert_eq!(closed_form_expectations(&thm21(2, "1/2")).unwrap().expected_index_cost, r("3/2"));
    }

    #[test]
    fn thm22_certain_highs_cost_two() {
        for n in [2, 3, 10] {
            let f = GeneratorParams::Thm22 { n, tau: r("1"), eps: r("1/100") };
            assert_eq!(closed_form_expectations(&f).unwrap().expected_index_cost, r("2"));
        }
    }

    #[test]
    fn other_families_are_unsupported() {
        assert!(matches!(closed_form_expectations(&GeneratorParams::Fig1), Err(Error::Unsupported(_))));
    }
}
