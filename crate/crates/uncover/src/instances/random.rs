use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::model::{Distribution, Instance, Interval};
use crate::rational::Rational;

/// Bounds and widths are drawn on this grid.
const GRID: i64 = 8;

/// Random set family over random intervals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomMinSet {
    pub n: usize,
    pub m: usize,
    pub max_set_size: usize,
    pub width_lo: Rational,
    pub width_hi: Rational,
    /// Probability that an interval is trivial.
    pub trivial_share: Rational,
    /// Mix uniform, triangular, two-point and point-mass laws instead of uniform only.
    pub mixed_laws: bool,
    pub seed: u64,
}

impl Default for RandomMinSet {
    fn default() -> Self {
        RandomMinSet {
            n: 8,
            m: 4,
            max_set_size: 3,
            width_lo: Rational::frac(1, 2),
            width_hi: Rational::integer(4),
            trivial_share: Rational::frac(1, 10),
            mixed_laws: false,
            seed: 0,
        }
    }
}

/// Random partition of the intervals into `m` sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomDisjoint {
    pub n: usize,
    pub m: usize,
    pub width_lo: Rational,
    pub width_hi: Rational,
    pub trivial_share: Rational,
    pub mixed_laws: bool,
    pub seed: u64,
}

impl Default for RandomDisjoint {
    fn default() -> Self {
        RandomDisjoint {
            n: 8,
            m: 3,
            width_lo: Rational::frac(1, 2),
            width_hi: Rational::integer(4),
            trivial_share: Rational::frac(1, 10),
            mixed_laws: false,
            seed: 0,
        }
    }
}

/// Random multicover: `n` multisets over `m` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RandomMinCover {
    pub n: usize,
    pub m: usize,
    pub coeff_lo: Rational,
    pub coeff_hi: Rational,
    pub rhs_lo: Rational,
    pub rhs_hi: Rational,
    pub mixed_laws: bool,
    pub seed: u64,
}

impl Default for RandomMinCover {
    fn default() -> Self {
        RandomMinCover {
            n: 6,
            m: 4,
            coeff_lo: Rational::frac(1, 2),
            coeff_hi: Rational::integer(3),
            rhs_lo: Rational::one(),
            rhs_hi: Rational::integer(5),
            mixed_laws: false,
            seed: 0,
        }
    }
}

fn grid_value<R: Rng>(rng: &mut R, lo: &Rational, hi: &Rational) -> Rational {
    let a = (lo * Rational::integer(GRID)).ceil();
    let b = (hi * Rational::integer(GRID)).floor();
    if a > b {
        return lo.clone();
    }
    let a: i64 = a.try_into().unwrap_or(i64::MAX);
    let b: i64 = b.try_into().unwrap_or(i64::MAX);
    Rational::frac(rng.random_range(a..=b), GRID)
}

fn bernoulli<R: Rng>(rng: &mut R, p: &Rational) -> bool {
    Rational::dyadic(rng.random_range(0..1u64 << 53), 53) < *p
}

fn law<R: Rng>(rng: &mut R, lower: &Rational, upper: &Rational, mixed: bool) -> Distribution {
    if !mixed {
        return Distribution::Uniform;
    }
    let w = upper - lower;
    let at = |num: i64, den: i64| lower + &w * Rational::frac(num, den);
    match rng.random_range(0..4) {
        0 => Distribution::Uniform,
        1 => Distribution::SymmetricTriangular,
        2 => {
            let p = Rational::frac(rng.random_range(1..=3), 4);
            Distribution::TwoPoint { lo: at(1, 8), p_lo: Rational::one() - &p, hi: at(5, 8), p_hi: p }
        }
        _ => Distribution::PointMass { value: at(rng.random_range(1..=7), 8) },
    }
}

fn check_widths(lo: &Rational, hi: &Rational) -> Result<()> {
    if !lo.is_positive() || lo > hi {
        return Err(invalid("width_range", format!("need 0 < {lo} <= {hi}")));
    }
    Ok(())
}

fn check_share(p: &Rational) -> Result<()> {
    if p.is_negative() || *p > Rational::one() {
        return Err(invalid("trivial_share", format!("{p} is not a probability")));
    }
    Ok(())
}

fn random_intervals<R: Rng>(
    rng: &mut R,
    n: usize,
    width_lo: &Rational,
    width_hi: &Rational,
    trivial_share: &Rational,
    mixed: bool,
) -> Vec<Interval> {
    (0..n)
        .map(|_| {
            let lower = Rational::frac(rng.random_range(0..=2 * GRID), GRID);
            let width = grid_value(rng, width_lo, width_hi);
            if bernoulli(rng, trivial_share) {
                Interval::trivial(lower)
            } else {
                let upper = &lower + width;
                let dist = law(rng, &lower, &upper, mixed);
                Interval::new(lower, upper, dist)
            }
        })
        .collect()
}

pub fn gen_random_minset(p: &RandomMinSet) -> Result<Instance> {
    if p.n == 0 || p.m == 0 || p.max_set_size == 0 {
        return Err(invalid("n", "n, m and max_set_size must be positive"));
    }
    check_widths(&p.width_lo, &p.width_hi)?;
    check_share(&p.trivial_share)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let intervals = random_intervals(&mut rng, p.n, &p.width_lo, &p.width_hi, &p.trivial_share, p.mixed_laws);
    let cap = p.max_set_size.min(p.n);
    let mut idx: Vec<usize> = (0..p.n).collect();
    let sets = (0..p.m)
        .map(|_| {
            let size = rng.random_range(1..=cap);
            idx.shuffle(&mut rng);
            let mut s = idx[..size].to_vec();
            s.sort_unstable();
            s
        })
        .collect();
    Instance::minset(intervals, sets)
}

pub fn gen_random_disjoint(p: &RandomDisjoint) -> Result<Instance> {
    if p.m == 0 || p.n < p.m {
        return Err(invalid("m", format!("need 1 <= m <= n, got m = {}, n = {}", p.m, p.n)));
    }
    check_widths(&p.width_lo, &p.width_hi)?;
    check_share(&p.trivial_share)?;
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let intervals = random_intervals(&mut rng, p.n, &p.width_lo, &p.width_hi, &p.trivial_share, p.mixed_laws);
    let mut idx: Vec<usize> = (0..p.n).collect();
    idx.shuffle(&mut rng);
    let mut sets: Vec<Vec<usize>> = idx[..p.m].iter().map(|&i| vec![i]).collect();
    for &i in &idx[p.m..] {
        let s = rng.random_range(0..p.m);
        sets[s].push(i);
    }
    for s in &mut sets {
        s.sort_unstable();
    }
    Instance::minset(intervals, sets)
}

pub fn gen_random_mincover(p: &RandomMinCover) -> Result<Instance> {
    if p.n == 0 || p.m == 0 {
        return Err(invalid("n", "n and m must be positive"));
    }
    if !p.coeff_lo.is_positive() || p.coeff_lo > p.coeff_hi {
        return Err(invalid("coeff_range", format!("need 0 < {} <= {}", p.coeff_lo, p.coeff_hi)));
    }
    if p.rhs_lo.is_negative() || p.rhs_lo > p.rhs_hi {
        return Err(invalid("rhs_range", format!("need 0 <= {} <= {}", p.rhs_lo, p.rhs_hi)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    let mut members: Vec<Vec<usize>> = (0..p.n)
        .map(|_| {
            let mut es: Vec<usize> = (0..p.m).filter(|_| rng.random_bool(0.5)).collect();
            if es.is_empty() {
                es.push(rng.random_range(0..p.m));
            }
            es
        })
        .collect();
    for e in 0..p.m {
        if !members.iter().any(|es| es.contains(&e)) {
            let mset = rng.random_range(0..p.n);
            members[mset].push(e);
            members[mset].sort_unstable();
        }
    }
    let mut intervals = Vec::new();
    let mut elements = Vec::new();
    let mut multisets = Vec::new();
    for es in &members {
        let mut ks = Vec::new();
        for &e in es {
            let upper = grid_value(&mut rng, &p.coeff_lo, &p.coeff_hi);
            let lower = &upper * Rational::frac(rng.random_range(0..=2), 4);
            let dist = law(&mut rng, &lower, &upper, p.mixed_laws);
            ks.push(intervals.len());
            intervals.push(Interval::new(lower, upper, dist));
            elements.push(e);
        }
        multisets.push(ks);
    }
    let rhs = (0..p.m).map(|_| grid_value(&mut rng, &p.rhs_lo, &p.rhs_hi)).collect();
    Instance::mincover(intervals, multisets, elements, rhs)
}

/// Fixed right-hand sides for a minset-family instance, drawn on the grid from `[lo, hi]`.
pub fn random_rhs(instance: &Instance, lo: &Rational, hi: &Rational, seed: u64) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rhs = (0..instance.sets().len()).map(|_| grid_value(&mut rng, lo, hi)).collect();
    instance.with_rhs(rhs)
}
