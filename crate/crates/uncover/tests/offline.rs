mod common;

use common::{brute_opt, brute_setcover, feasible, r, subsets_by_size};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uncover::instances::*;
use uncover::model::*;
use uncover::offline::*;
use uncover::online::run_disjoint;
use uncover::Error;

fn two_sets() -> (Instance, Realization) {
    let inst = Instance::minset(
        vec![Interval::uniform(r("0"), r("4")), Interval::uniform(r("0"), r("2")), Interval::uniform(r("0"), r("10"))],
        vec![vec![0, 1], vec![2]],
    )
    .unwrap();
    let real = Realization::new(&inst, vec![r("3"), r("1/2"), r("1")]).unwrap();
    (inst, real)
}

fn random_minset(rng: &mut ChaCha8Rng, lo_n: usize, max_n: usize, max_m: usize) -> Instance {
    gen_random_minset(&RandomMinSet {
        n: rng.random_range(lo_n..=max_n),
        m: rng.random_range(1..=max_m),
        max_set_size: rng.random_range(1..=4),
        mixed_laws: rng.random_bool(0.5),
        seed: rng.random(),
        ..Default::default()
    })
    .unwrap()
}

#[test]
fn two_set_optimum() {
    let (inst, real) = two_sets();
    let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap();
    assert_eq!((opt.opt_size, opt.opt_set.clone()), (2, vec![0, 2]));
    assert_eq!(exact_opt_disjoint(&inst, &real).unwrap().opt_set, vec![0, 2]);
}

#[test]
fn single_set_needs_every_nontrivial_member() {
    let inst = Instance::minset(
        vec![Interval::uniform(r("0"), r("1")), Interval::trivial(r("2")), Interval::uniform(r("1"), r("3"))],
        vec![vec![0, 1, 2]],
    )
    .unwrap();
    let real = sample_realization(&inst, 3);
    assert_eq!(exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_set, vec![0, 2]);
    assert_eq!(offline_greedy(&inst, &real).unwrap().len(), 2);
    let b = bounds(&inst, None).unwrap();
    let gap = (r("6") - r("3")) * online_gamma_of(&inst);
    assert_eq!(b.grsetu, Some(ceil_ln(&gap)));
}

fn online_gamma_of(inst: &Instance) -> uncover::Rational {
    uncover::covering::online_gamma(inst).unwrap()
}

#[test]
fn trivial_minimum_costs_nothing() {
    let inst = Instance::minset(
        vec![Interval::trivial(r("1")), Interval::uniform(r("2"), r("3"))],
        vec![vec![0], vec![1]],
    )
    .unwrap();
    let real = sample_realization(&inst, 0);
    assert_eq!(exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_size, 0);
    assert_eq!(exact_opt_disjoint(&inst, &real).unwrap().opt_size, 0);
}

#[test]
fn disjoint_optimum_rejects_overlap() {
    let (inst, real) = gen_fig1();
    assert!(matches!(exact_opt_disjoint(&inst, &real), Err(Error::Contract(_))));
}

#[test]
fn budget_exhaustion_reports_bounds() {
    let (inst, real) = gen_fig1();
    match exact_opt(&inst, &real, 1) {
        Err(Error::BudgetExhausted { budget, lower, upper }) => {
            assert_eq!(budget, 1);
            assert!(lower <= 4 && 4 <= upper, "[{lower}, {upper}]");
        }
        other => panic!("expected exhaustion, got {other:?}"),
    }
}

#[test]
fn thm22_optimum_is_one() {
    let inst = gen_thm22(50, &r("1/2"), &r("1/100")).unwrap();
    for seed in 0..50 {
        let real = sample_realization(&inst, seed);
        let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap();
        assert_eq!(opt.opt_set, vec![50]);
    }
}

#[test]
fn thm21_optimum_by_realization() {
    let inst = gen_thm21(6, &r("1/2"), &r("1/100")).unwrap();
    let lows = vec![r("13/20")].into_iter().chain((0..6).map(|_| r("1/100"))).collect();
    let all_low = Realization::new(&inst, lows).unwrap();
    assert_eq!(exact_opt(&inst, &all_low, DEFAULT_BUDGET).unwrap().opt_size, 6);
    let mut vals = all_low.values().to_vec();
    vals[4] = r("7/10");
    let one_high = Realization::new(&inst, vals).unwrap();
    assert_eq!(exact_opt(&inst, &one_high, DEFAULT_BUDGET).unwrap().opt_set, vec![4]);
}

#[test]
fn exact_matches_brute_force_on_every_kind() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let base = random_minset(&mut rng, 1, 9, 5);
        let inst = match rng.random_range(0..3) {
            0 => base,
            1 => random_rhs(&base, &r("0"), &r("5"), rng.random()).unwrap(),
            _ => gen_random_mincover(&RandomMinCover {
                n: rng.random_range(1..=7),
                m: rng.random_range(1..=4),
                mixed_laws: rng.random_bool(0.5),
                seed: rng.random(),
                ..Default::default()
            })
            .unwrap(),
        };
        let real = sample_realization(&inst, rng.random());
        let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap();
        assert_eq!(opt.opt_size, brute_opt(&inst, &real), "{}", save_instance(&inst));
        assert!(feasible(&inst, &real, &opt.opt_set));
    }
}

#[test]
fn optimum_witness_is_subset_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let inst = random_minset(&mut rng, 2, 12, 6);
        let real = sample_realization(&inst, rng.random());
        let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap();
        let forced: Vec<usize> = opt.star.map(|s| inst.sets()[s].clone()).unwrap_or_default();
        for &u in &opt.opt_set {
            if forced.contains(&u) {
                continue;
            }
            let rest: Vec<usize> = opt.opt_set.iter().copied().filter(|&h| h != u).collect();
            assert!(!feasible(&inst, &real, &rest));
        }
    }
}

#[test]
fn feasibility_checks_agree_with_first_principles() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let inst = random_minset(&mut rng, 1, 7, 4);
        let real = sample_realization(&inst, rng.random());
        let units: Vec<usize> = (0..inst.n_units()).collect();
        for q in subsets_by_size(&units) {
            assert_eq!(check_feasible(&inst, &real, &q).unwrap(), feasible(&inst, &real, &q));
        }
    }
}

#[test]
fn disjoint_optimum_and_charge_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.random_range(1..=12);
        let inst = gen_random_disjoint(&RandomDisjoint {
            n,
            m: rng.random_range(1..=n.min(5)),
            mixed_laws: rng.random_bool(0.5),
            seed: rng.random(),
            ..Default::default()
        })
        .unwrap();
        let real = sample_realization(&inst, rng.random());
        let d = exact_opt_disjoint(&inst, &real).unwrap();
        assert_eq!(d.opt_size, exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_size);
        assert_eq!(d.opt_size, brute_opt(&inst, &real));
        let t = run_disjoint(&inst, &real).unwrap();
        for s in 0..inst.sets().len() {
            let h = t.iterations.iter().filter(|it| it.target_set == Some(s)).count();
            assert!(h <= 2 * disjoint_prefix_len(&inst, &real, s), "set {s}: h = {h}");
        }
    }
}

#[test]
fn greedy_is_feasible_and_bounded_by_grsetu() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..100 {
        let inst = random_minset(&mut rng, 1, 10, 5);
        let real = sample_realization(&inst, rng.random());
        let g = offline_greedy(&inst, &real).unwrap();
        assert!(feasible(&inst, &real, &g));
        let b = bounds(&inst, Some(&real)).unwrap();
        if let (Some(a), Some(u)) = (b.grset_online, b.grsetu) {
            assert!(a <= u);
        }
    }
}

#[test]
fn reduction_preserves_optimum_and_greedy() {
    let cases = [(2, vec![vec![0], vec![1]], 2), (2, vec![vec![0, 1]], 1)];
    let (w_r, delta, eps) = default_reduction_params();
    for (universe, sets, want) in cases {
        let src = SetCoverSource { universe, sets };
        let (inst, real) = gen_setcover_reduction(&src, &w_r, &delta, &eps).unwrap();
        assert_eq!(exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_size, want);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let universe = rng.random_range(1..=6);
        let k = rng.random_range(1..=5);
        let mut sets: Vec<Vec<usize>> =
            (0..k).map(|_| (0..universe).filter(|_| rng.random_bool(0.4)).collect()).collect();
        for e in 0..universe {
            if !sets.iter().any(|s| s.contains(&e)) {
                let j = rng.random_range(0..k);
                sets[j].push(e);
                sets[j].sort_unstable();
            }
        }
        sets.retain(|s| !s.is_empty());
        let want = brute_setcover(universe, &sets).unwrap();
        let src = SetCoverSource { universe, sets };
        let (inst, real) = gen_setcover_reduction(&src, &w_r, &delta, &eps).unwrap();
        assert_eq!(exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_size, want);
        assert_eq!(offline_greedy(&inst, &real).unwrap().len(), src.greedy().len());
    }
}

#[test]
fn maxset_reflection_is_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..40 {
        let inst = random_minset(&mut rng, 1, 7, 3);
        let real = sample_realization(&inst, rng.random());
        let (ri, rr) = reflect_maxset(&inst, &real).unwrap();
        let (back_i, back_r) = reflect_maxset(&ri, &rr).unwrap();
        assert_eq!((back_i, back_r), (inst.clone(), real.clone()));
        assert_eq!(balancing_tau(&ri), inverse_balancing_tau(&inst));
        let units: Vec<usize> = (0..inst.n_intervals()).collect();
        for q in subsets_by_size(&units) {
            assert_eq!(is_feasible_maxset(&inst, &real, &q), feasible(&ri, &rr, &q));
        }
    }
}
