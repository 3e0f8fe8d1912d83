use crate::error::{invalid, Result};
use crate::model::{Distribution, Instance, Interval, Realization};
use crate::rational::{r, Rational};

/// The eight-interval, four-set example with its hidden values.
pub fn gen_fig1() -> (Instance, Realization) {
    let bounds = [("1", "3"), ("1/2", "5/2"), ("0", "3"), ("1/2", "4"), ("1", "5"), ("1", "3"), ("2", "5"), ("1", "5")];
    let intervals = bounds.iter().map(|(l, u)| Interval::uniform(r(l), r(u))).collect();
    let sets = vec![vec![0, 1], vec![2, 3, 4], vec![3, 4, 5], vec![6, 7]];
    let inst = Instance::minset(intervals, sets).expect("valid construction");
    let values = ["5/2", "7/4", "1/4", "3/4", "4", "3/2", "9/2", "2"].iter().map(|v| r(v)).collect();
    let real = Realization::new(&inst, values).expect("values inside their intervals");
    (inst, real)
}

/// Default `ε` of the adversarial two-point laws.
pub fn default_eps() -> Rational {
    Rational::frac(1, 100)
}

fn check_lb_params(n: usize, tau: &Rational, eps: &Rational) -> Result<()> {
    if n == 0 {
        return Err(invalid("n", "need at least one uncertain interval"));
    }
    if !tau.is_positive() || *tau > Rational::one() {
        return Err(invalid("tau", format!("{tau} is not in (0, 1]")));
    }
    if !eps.is_positive() || *eps >= Rational::frac(1, 2) {
        return Err(invalid("eps", format!("{eps} is not in (0, 1/2)")));
    }
    Ok(())
}

fn lb_skeleton(laws: Vec<Distribution>) -> Instance {
    let mut intervals = vec![Interval::trivial(Rational::frac(13, 20))];
    intervals.extend(laws.into_iter().map(|d| Interval::new(Rational::zero(), Rational::one(), d)));
    let n = intervals.len() - 1;
    Instance::minset(intervals, vec![vec![0], (1..=n).collect()]).expect("valid construction")
}

/// A trivial `{0.65}` against `n` intervals `(0,1)` that draw `0.7` with probability `τ` and `ε`
/// otherwise.
pub fn gen_thm21(n: usize, tau: &Rational, eps: &Rational) -> Result<Instance> {
    check_lb_params(n, tau, eps)?;
    let law = Distribution::TwoPoint {
        lo: eps.clone(),
        p_lo: Rational::one() - tau,
        hi: Rational::frac(7, 10),
        p_hi: tau.clone(),
    };
    Ok(lb_skeleton(vec![law; n]))
}

/// Like [`gen_thm21`], but the first `n-1` intervals draw `0.51` with probability `τ` and the
/// last one is `0.7` for sure.
pub fn gen_thm22(n: usize, tau: &Rational, eps: &Rational) -> Result<Instance> {
    check_lb_params(n, tau, eps)?;
    let law = Distribution::TwoPoint {
        lo: eps.clone(),
        p_lo: Rational::one() - tau,
        hi: Rational::frac(51, 100),
        p_hi: tau.clone(),
    };
    let mut laws = vec![law; n - 1];
    laws.push(Distribution::PointMass { value: Rational::frac(7, 10) });
    Ok(lb_skeleton(laws))
}
