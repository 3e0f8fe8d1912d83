use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::closed_form::closed_form_expectations;
use super::trials::{aggregate, run_records, TrialConfig};
use crate::error::{Error, Result};
use crate::instances::{
    gen_fig1, gen_random_mincover, gen_random_minset, random_rhs, GeneratorParams, RandomMinCover, RandomMinSet,
};
use crate::model::{sample_realization, Instance, Realization};
use crate::offline::{bounds, check_feasible, exact_opt, offline_greedy, round_checks, verify_alpha_approx};
use crate::online::{run_detrhs, run_mincover, run_minset, Algorithm, RunTrace};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Lb21,
    Lb22,
    Equivalence,
    GreedyBound,
    Alpha,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Lb21, Suite::Lb22, Suite::Equivalence, Suite::GreedyBound, Suite::Alpha];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lb21 => "lb21",
            Suite::Lb22 => "lb22",
            Suite::Equivalence => "equivalence",
            Suite::GreedyBound => "greedy-bound",
            Suite::Alpha => "alpha",
        }
    }

    fn default_trials(self) -> usize {
        match self {
            Suite::Lb21 | Suite::Lb22 => 10_000,
            Suite::Equivalence => 1_000,
            Suite::GreedyBound | Suite::Alpha => 200,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteConfig {
    /// Overrides the suite's sample count.
    pub trials: Option<usize>,
    pub base_seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOutcome {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: &str, passed: bool, detail: String) -> Check {
    Check { name: name.to_string(), passed, detail }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteOutcome> {
    let n = cfg.trials.unwrap_or(suite.default_trials());
    let checks = match suite {
        Suite::Lb21 => lb21(n, cfg.base_seed)?,
        Suite::Lb22 => lb22(n, cfg.base_seed)?,
        Suite::Equivalence => equivalence(n, cfg.base_seed)?,
        Suite::GreedyBound => greedy_bound(n, cfg.base_seed)?,
        Suite::Alpha => alpha(n, cfg.base_seed)?,
    };
    Ok(SuiteOutcome { suite: suite.name().to_string(), checks })
}

fn lb_trials(family: &GeneratorParams, trials: usize, base_seed: u64) -> Result<(Instance, TrialConfig)> {
    let (inst, _) = family.generate()?;
    let cfg = TrialConfig { trials, base_seed, with_opt: true, ..TrialConfig::default() };
    Ok((inst, cfg))
}

fn within_se(name: &str, mean: f64, target: &Rational, variance: &Rational, trials: usize) -> Check {
    let se = (variance.to_f64() / trials as f64).sqrt();
    let t = target.to_f64();
    check(name, (mean - t).abs() <= 3.0 * se, format!("mean {mean:.5}, closed form {t:.5}, 3·SE = {:.5}", 3.0 * se))
}

fn lb21(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let family = GeneratorParams::Thm21 { n: 20, tau: Rational::frac(1, 2), eps: Rational::frac(1, 100) };
    let cf = closed_form_expectations(&family)?;
    let (inst, cfg) = lb_trials(&family, trials, seed)?;
    let recs = run_records(&inst, Algorithm::Disjoint, &cfg)?;
    let rep = aggregate(&inst, "thm21", Algorithm::Disjoint, &cfg, &recs)?;
    let (Some(mo), Some(ma)) = (rep.mean_opt, rep.mean_alg) else {
        return Ok(vec![check("trials", false, "no trials with a known optimum".into())]);
    };
    Ok(vec![
        within_se("mean OPT within 3 SE of closed form", mo, &cf.expected_opt, &cf.variance_opt, trials),
        within_se("mean ALG within 3 SE of closed form", ma, &cf.expected_index_cost, &cf.variance_index_cost, trials),
    ])
}

fn lb22(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let family = GeneratorParams::Thm22 { n: 50, tau: Rational::frac(1, 2), eps: Rational::frac(1, 100) };
    let cf = closed_form_expectations(&family)?;
    let (inst, cfg) = lb_trials(&family, trials, seed)?;
    let recs = run_records(&inst, Algorithm::Disjoint, &cfg)?;
    let rep = aggregate(&inst, "thm22", Algorithm::Disjoint, &cfg, &recs)?;
    let opt_one = recs.iter().filter(|r| r.opt_queries == Some(1)).count();
    let mean = rep.mean_alg.unwrap_or(f64::NAN);
    let ratio = rep.ratio.unwrap_or(f64::NAN);
    Ok(vec![
        check("OPT = 1 on every trial", opt_one == recs.len(), format!("{opt_one}/{}", recs.len())),
        check(
            "mean ALG in [3.6, 4.4]",
            (3.6..=4.4).contains(&mean),
            format!("mean {mean:.4}, exact expectation {:.4}", cf.expected_index_cost.to_f64()),
        ),
        check("ratio within 10% of 4", (ratio - 4.0).abs() <= 0.4, format!("ratio {ratio:.4}")),
    ])
}

fn small_minset(rng: &mut ChaCha8Rng, max_n: usize, max_m: usize) -> Result<Instance> {
    let p = RandomMinSet {
        n: rng.random_range(2..=max_n),
        m: rng.random_range(1..=max_m),
        max_set_size: rng.random_range(1..=4),
        mixed_laws: rng.random_bool(0.5),
        seed: rng.random(),
        ..RandomMinSet::default()
    };
    gen_random_minset(&p)
}

fn random_query_set(rng: &mut ChaCha8Rng, inst: &Instance, real: &Realization) -> Result<Vec<usize>> {
    let units = inst.nontrivial_units();
    Ok(match rng.random_range(0..3) {
        0 => units.into_iter().filter(|_| rng.random_bool(0.5)).collect(),
        1 => {
            let mut q = exact_opt(inst, real, u64::MAX)?.opt_set;
            let extra: Vec<usize> = units.into_iter().filter(|u| !q.contains(u) && rng.random_bool(0.3)).collect();
            q.extend(extra);
            q
        }
        _ => {
            let mut q = exact_opt(inst, real, u64::MAX)?.opt_set;
            if !q.is_empty() {
                q.remove(rng.random_range(0..q.len()));
            }
            q
        }
    })
}

fn equivalence(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let outcomes: Vec<Result<bool>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let inst = small_minset(&mut rng, 10, 5)?;
            let real = sample_realization(&inst, rng.random());
            let q = random_query_set(&mut rng, &inst, &real)?;
            check_feasible(&inst, &real, &q)
        })
        .collect();
    let mut disagree = 0;
    let mut feasible = 0;
    for o in outcomes {
        match o {
            Ok(f) => feasible += usize::from(f),
            Err(Error::Invariant(_)) => disagree += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(vec![check(
        "structural and covering feasibility agree",
        disagree == 0,
        format!("{disagree} disagreements over {trials} triples ({feasible} feasible)"),
    )])
}

fn greedy_bound(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let rows: Vec<Result<(usize, usize, u32, usize)>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
            let inst = small_minset(&mut rng, 12, 6)?;
            let real = sample_realization(&inst, rng.random());
            let g = offline_greedy(&inst, &real)?;
            let opt = exact_opt(&inst, &real, u64::MAX)?.opt_size;
            let grset = bounds(&inst, Some(&real))?.grset.unwrap_or(0);
            Ok((g.len(), opt, grset, inst.sets().len()))
        })
        .collect();
    let mut worst = 0.0f64;
    let mut bad = 0;
    let mut first = String::new();
    let mut zero_factor = 0;
    for (t, row) in rows.into_iter().enumerate() {
        let (g, opt, f, m) = row?;
        if g > f as usize * opt {
            if bad == 0 {
                first = format!("; first at sample {t}: m = {m}, greedy {g}, OPT {opt}, grset {f}");
            }
            bad += 1;
            zero_factor += usize::from(f == 0);
        }
        if opt > 0 {
            worst = worst.max(g as f64 / opt as f64);
        }
    }
    let (fig, real) = gen_fig1();
    let fig_grset = bounds(&fig, Some(&real))?.grset;
    Ok(vec![
        check("greedy within grset·OPT", bad == 0, format!("{bad} violations over {trials} ({zero_factor} with grset = 0); worst ratio {worst:.3}{first}")),
        check("FIG1 grset(4) = 6", fig_grset == Some(6), format!("{fig_grset:?}")),
    ])
}

type Runner = fn(&Instance, &Realization) -> Result<RunTrace>;

fn alpha_case(t: usize, seed: u64, which: usize) -> Result<(bool, Option<bool>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64).wrapping_mul(3).wrapping_add(which as u64));
    let (inst, runner): (Instance, Runner) = match which {
        0 => {
            let base = small_minset(&mut rng, 10, 5)?;
            let hi = Rational::integer(rng.random_range(1..=4));
            (random_rhs(&base, &Rational::zero(), &hi, rng.random())?, run_detrhs)
        }
        1 => {
            let p = RandomMinCover {
                n: rng.random_range(1..=10),
                m: rng.random_range(1..=5),
                mixed_laws: rng.random_bool(0.5),
                seed: rng.random(),
                ..RandomMinCover::default()
            };
            (gen_random_mincover(&p)?, run_mincover)
        }
        _ => (small_minset(&mut rng, 10, 5)?, run_minset),
    };
    let real = sample_realization(&inst, rng.random());
    let trace = runner(&inst, &real)?;
    let opt = exact_opt(&inst, &real, u64::MAX)?.opt_size;
    let passed = verify_alpha_approx(&inst, &real, &trace, &Rational::integer(2), opt)?.iter().all(|v| v.passed);
    let rounds = (which == 2)
        .then(|| round_checks(&inst, &trace).map(|cs| cs.iter().all(|c| c.count_ok && c.growth_ok)))
        .transpose()?;
    Ok((passed, rounds))
}

fn alpha(trials: usize, seed: u64) -> Result<Vec<Check>> {
    let names = ["fixed right-hand sides", "multicover", "general selection"];
    let mut checks = Vec::new();
    for (which, name) in names.iter().enumerate() {
        let rows: Vec<Result<(bool, Option<bool>)>> =
            (0..trials).into_par_iter().map(|t| alpha_case(t, seed, which)).collect();
        let mut pass = 0;
        let mut rounds_ok = 0;
        for row in rows {
            let (p, r) = row?;
            pass += usize::from(p);
            rounds_ok += usize::from(r == Some(true));
        }
        checks.push(check(&format!("{name}: every iteration 2-approximates"), pass == trials, format!("{pass}/{trials}")));
        if which == 2 {
            checks.push(check(
                "general selection: round counts and threshold growth",
                rounds_ok == trials,
                format!("{rounds_ok}/{trials}"),
            ));
        }
    }
    Ok(checks)
}
