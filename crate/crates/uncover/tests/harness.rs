mod common;

use common::r;
use uncover::harness::*;
use uncover::instances::*;
use uncover::online::{Algorithm, Policy};

fn cfg(trials: usize, seed: u64) -> TrialConfig {
    TrialConfig { trials, base_seed: seed, with_opt: true, ..TrialConfig::default() }
}

#[test]
fn zero_trials_give_an_empty_report() {
    let (inst, _) = gen_fig1();
    let rep = run_trials(&inst, "fig1", Algorithm::MinSet, &cfg(0, 0)).unwrap();
    assert_eq!(rep.trials, 0);
    assert_eq!(rep.mean_alg, None);
    assert_eq!(to_csv(&[rep]).unwrap(), CSV_COLUMNS.join(",") + "\n");
    assert_eq!(to_csv(&[]).unwrap(), CSV_COLUMNS.join(",") + "\n");
}

#[test]
fn reports_are_reproducible_and_round_trip() {
    let (inst, _) = gen_fig1();
    let algs = [Algorithm::MinSet, Algorithm::Baseline(Policy::RandomOrder(0))];
    let make = || -> Vec<Report> {
        algs.iter().map(|&a| run_trials(&inst, "fig1", a, &TrialConfig { verify_alpha: Some(r("2")), ..cfg(40, 7) }).unwrap()).collect()
    };
    let a = make();
    let b = make();
    assert_eq!(to_json(&a), to_json(&b));
    assert_eq!(to_csv(&a).unwrap(), to_csv(&b).unwrap());
    assert_eq!(parse_reports(&to_json(&a)).unwrap(), a);
    assert_eq!(to_csv(&a).unwrap().lines().count(), 1 + algs.len());
    assert_eq!(a[0].verify_pass_rate, Some(1.0));
    let ratio = a[0].ratio.unwrap();
    assert!((ratio - a[0].mean_alg.unwrap() / a[0].mean_opt.unwrap()).abs() < 1e-12);
}

#[test]
fn records_follow_trial_seeds() {
    let inst = gen_thm22(10, &r("1/2"), &r("1/100")).unwrap();
    let recs = run_records(&inst, Algorithm::Disjoint, &cfg(25, 100)).unwrap();
    for (i, rec) in recs.iter().enumerate() {
        assert_eq!((rec.trial_index, rec.seed), (i, 100 + i as u64));
        assert_eq!(rec.opt_queries, Some(1));
    }
    let tail = run_records(&inst, Algorithm::Disjoint, &cfg(5, 120)).unwrap();
    assert_eq!(tail[0].alg_queries, recs[20].alg_queries);
}

#[test]
fn budget_exhaustion_is_flagged_per_trial() {
    let (inst, _) = gen_fig1();
    let c = TrialConfig { budget: 1, ..cfg(3, 0) };
    let rep = run_trials(&inst, "fig1", Algorithm::MinSet, &c).unwrap();
    assert_eq!(rep.opt_failures, 3);
    assert_eq!(rep.ratio, None);
}

#[test]
fn interval_width_shrinks_with_more_trials() {
    let inst = gen_thm22(20, &r("1/2"), &r("1/100")).unwrap();
    let width = |n| {
        let rep = run_trials(&inst, "thm22", Algorithm::Disjoint, &cfg(n, 1)).unwrap();
        rep.ci_hi.unwrap() - rep.ci_lo.unwrap()
    };
    let (small, large) = (width(400), width(1600));
    let shrink = small / large;
    assert!((1.6..2.4).contains(&shrink), "ratio {shrink}");
}

#[test]
fn emit_writes_by_extension() {
    let dir = tempfile::tempdir().unwrap();
    let (inst, _) = gen_fig1();
    let rep = vec![run_trials(&inst, "fig1", Algorithm::MinSet, &cfg(3, 0)).unwrap()];
    let csv = dir.path().join("r.csv");
    let json = dir.path().join("r.json");
    emit(&rep, Format::from_path(&csv), &csv).unwrap();
    emit(&rep, Format::from_path(&json), &json).unwrap();
    assert!(std::fs::read_to_string(&csv).unwrap().starts_with("algorithm,trials,"));
    assert_eq!(parse_reports(&std::fs::read_to_string(&json).unwrap()).unwrap(), rep);
    let missing = dir.path().join("no/such/dir/r.csv");
    let err = emit(&rep, Format::Csv, &missing).unwrap_err().to_string();
    assert!(err.contains("no/such/dir"), "{err}");
}

#[test]
fn suites_parse_by_name() {
    for s in Suite::ALL {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("lb23".parse::<Suite>().is_err());
    let out = run_suite(Suite::Equivalence, &SuiteConfig { trials: Some(20), base_seed: 1 }).unwrap();
    assert!(out.passed(), "{out:?}");
}
