use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use uncover::harness::{emit, run_suite, run_trials, to_json, Format, Suite, SuiteConfig, TrialConfig};
use uncover::instances::{
    load_instance, load_realization, parse_json, read_file, save_instance, save_realization, write_file,
    GeneratorParams, RandomDisjoint, RandomMinCover, RandomMinSet, SetCoverSource,
};
use uncover::model::sample_realization;
use uncover::offline::{exact_opt, DEFAULT_BUDGET};
use uncover::online::{run, Algorithm};
use uncover::{Error, Rational, Result};

#[derive(Parser)]
#[command(name = "uncover", version, about = "Query strategies under explorable uncertainty")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance (and its intended realization, if the family has one).
    Generate(GenerateArgs),
    /// Monte Carlo trials of one or more algorithms on one or more instances.
    Run(RunArgs),
    /// Run one algorithm on one realization and print its trace.
    Trace(TraceArgs),
    /// Exact optimum for one realization.
    Opt(OptArgs),
    /// Self-checking statistical and property suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Fig1,
    Thm21,
    Thm22,
    SetcoverReduction,
    RandomMinset,
    RandomDisjoint,
    RandomMincover,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Full generator parameters as JSON; overrides the family and every other flag.
    #[arg(long)]
    params: Option<PathBuf>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    tau: Option<Rational>,
    #[arg(long)]
    eps: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    mixed_laws: bool,
    /// SetCover source `{"universe": k, "sets": [[...], ...]}` for the reduction.
    #[arg(long)]
    source: Option<PathBuf>,
    #[arg(long)]
    out: PathBuf,
    /// Where to write the intended realization, if any.
    #[arg(long)]
    realization_out: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[arg(long = "instance", required = true)]
    instances: Vec<PathBuf>,
    /// disjoint | detrhs | mincover | minset | baseline:all | baseline:width | baseline:random[:<seed>]
    #[arg(long = "alg", required = true)]
    algorithms: Vec<Algorithm>,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    /// Base seed; the UNCOVER_SEED environment variable takes precedence.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    opt: bool,
    #[arg(long)]
    verify_alpha: Option<Rational>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// `.csv` or `.json`; JSON on stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TraceArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Realization file; sampled from `--seed` when absent.
    #[arg(long)]
    realization: Option<PathBuf>,
    #[arg(long)]
    alg: Algorithm,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct OptArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    realization: PathBuf,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// lb21 | lb22 | equivalence | greedy-bound | alpha | all
    #[arg(long = "suite", required = true)]
    suites: Vec<String>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn env_seed(default: u64) -> Result<u64> {
    match std::env::var("UNCOVER_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Unsupported(format!("UNCOVER_SEED={v:?} is not a u64"))),
        Err(_) => Ok(default),
    }
}

fn params(a: &GenerateArgs) -> Result<GeneratorParams> {
    if let Some(p) = &a.params {
        return parse_json(&read_file(p)?);
    }
    let tau = a.tau.clone().unwrap_or_else(|| Rational::frac(1, 2));
    let eps = a.eps.clone().unwrap_or_else(uncover::instances::default_eps);
    Ok(match a.family {
        Family::Fig1 => GeneratorParams::Fig1,
        Family::Thm21 => GeneratorParams::Thm21 { n: a.n.unwrap_or(20), tau, eps },
        Family::Thm22 => GeneratorParams::Thm22 { n: a.n.unwrap_or(50), tau, eps },
        Family::SetcoverReduction => {
            let path = a.source.as_ref().ok_or_else(|| Error::Unsupported("--source is required".into()))?;
            let source: SetCoverSource = parse_json(&read_file(path)?)?;
            let (w_r, delta, eps) = uncover::instances::default_reduction_params();
            GeneratorParams::SetCoverReduction { source, w_r, delta, eps: a.eps.clone().unwrap_or(eps) }
        }
        Family::RandomMinset => {
            let d = RandomMinSet::default();
            GeneratorParams::RandomMinSet(RandomMinSet {
                n: a.n.unwrap_or(d.n),
                m: a.m.unwrap_or(d.m),
                mixed_laws: a.mixed_laws,
                seed: a.seed,
                ..d
            })
        }
        Family::RandomDisjoint => {
            let d = RandomDisjoint::default();
            GeneratorParams::RandomDisjoint(RandomDisjoint {
                n: a.n.unwrap_or(d.n),
                m: a.m.unwrap_or(d.m),
                mixed_laws: a.mixed_laws,
                seed: a.seed,
                ..d
            })
        }
        Family::RandomMincover => {
            let d = RandomMinCover::default();
            GeneratorParams::RandomMinCover(RandomMinCover {
                n: a.n.unwrap_or(d.n),
                m: a.m.unwrap_or(d.m),
                mixed_laws: a.mixed_laws,
                seed: a.seed,
                ..d
            })
        }
    })
}

fn generate(a: GenerateArgs) -> Result<()> {
    let (inst, real) = params(&a)?.generate()?;
    write_file(&a.out, &save_instance(&inst))?;
    if let Some(path) = &a.realization_out {
        let real = real.ok_or_else(|| Error::Unsupported("this family has no intended realization".into()))?;
        write_file(path, &save_realization(&real))?;
    }
    Ok(())
}

fn label(path: &Path) -> String {
    path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

fn run_cmd(a: RunArgs) -> Result<()> {
    let cfg = TrialConfig {
        trials: a.trials,
        base_seed: env_seed(a.seed)?,
        with_opt: a.opt,
        verify_alpha: a.verify_alpha,
        budget: a.budget,
    };
    let mut reports = Vec::new();
    for path in &a.instances {
        let inst = load_instance(&read_file(path)?)?;
        for &alg in &a.algorithms {
            reports.push(run_trials(&inst, &label(path), alg, &cfg)?);
        }
    }
    match &a.out {
        Some(path) => emit(&reports, Format::from_path(path), path),
        None => {
            print!("{}", to_json(&reports));
            Ok(())
        }
    }
}

fn trace(a: TraceArgs) -> Result<()> {
    let inst = load_instance(&read_file(&a.instance)?)?;
    let real = match &a.realization {
        Some(p) => load_realization(&inst, &read_file(p)?)?,
        None => sample_realization(&inst, a.seed),
    };
    let t = run(a.alg, &inst, &real, Some(a.seed))?;
    println!("{}", serde_json::to_string_pretty(&t).expect("traces serialize"));
    Ok(())
}

fn opt(a: OptArgs) -> Result<()> {
    let inst = load_instance(&read_file(&a.instance)?)?;
    let real = load_realization(&inst, &read_file(&a.realization)?)?;
    let res = exact_opt(&inst, &real, a.budget)?;
    println!("{}", serde_json::to_string_pretty(&res).expect("results serialize"));
    Ok(())
}

fn verify(a: VerifyArgs) -> Result<bool> {
    let mut suites = Vec::new();
    for s in &a.suites {
        if s == "all" {
            suites.extend(Suite::ALL);
        } else {
            suites.push(s.parse::<Suite>()?);
        }
    }
    let cfg = SuiteConfig { trials: a.trials, base_seed: env_seed(a.seed)? };
    let mut all = true;
    for suite in suites {
        let outcome = run_suite(suite, &cfg)?;
        for c in &outcome.checks {
            println!("{} {}: {}: {}", if c.passed { "PASS" } else { "FAIL" }, outcome.suite, c.name, c.detail);
        }
        all &= outcome.passed();
    }
    Ok(all)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a).map(|()| true),
        Command::Run(a) => run_cmd(a).map(|()| true),
        Command::Trace(a) => trace(a).map(|()| true),
        Command::Opt(a) => opt(a).map(|()| true),
        Command::Verify(a) => verify(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
