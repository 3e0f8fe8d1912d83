mod common;

use common::r;
use uncover::instances::*;
use uncover::model::*;
use uncover::Error;

#[test]
fn random_generators_are_seed_deterministic() {
    for seed in 0..20 {
        let p = RandomMinSet { seed, mixed_laws: true, ..Default::default() };
        assert_eq!(save_instance(&gen_random_minset(&p).unwrap()), save_instance(&gen_random_minset(&p).unwrap()));
        let d = RandomDisjoint { seed, ..Default::default() };
        let inst = gen_random_disjoint(&d).unwrap();
        assert!(inst.is_disjoint());
        assert_eq!(inst, gen_random_disjoint(&d).unwrap());
    }
}

#[test]
fn mincover_generator_respects_invariants() {
    for seed in 0..1000 {
        let p = RandomMinCover { seed, mixed_laws: seed % 2 == 0, ..Default::default() };
        let inst = gen_random_mincover(&p).unwrap();
        let back = load_instance(&save_instance(&inst)).unwrap();
        assert_eq!(back, inst);
        assert!((0..inst.n_constraints()).all(|c| !inst.constraint_units(c).is_empty()));
        sample_realization(&inst, seed);
    }
}

#[test]
fn lower_bound_families() {
    let inst = gen_thm21(5, &r("1/2"), &r("1/100")).unwrap();
    assert_eq!(balancing_tau(&inst), r("1/2"));
    assert_eq!(inst.sets(), &[vec![0], vec![1, 2, 3, 4, 5]]);
    let inst = gen_thm22(5, &r("1/2"), &r("1/100")).unwrap();
    for seed in 0..50 {
        let real = sample_realization(&inst, seed);
        assert_eq!(real.value(5), &r("7/10"));
        assert!(real.values()[1..5].iter().all(|v| *v == r("51/100") || *v == r("1/100")));
    }
    assert!(matches!(gen_thm21(5, &r("0"), &r("1/100")), Err(Error::Invalid { .. })));
    assert!(matches!(gen_thm22(5, &r("1/2"), &r("1/2")), Err(Error::Invalid { .. })));
}

#[test]
fn all_trivial_instances_sample_their_lowers() {
    let inst = Instance::minset(vec![Interval::trivial(r("1")), Interval::trivial(r("-2"))], vec![vec![0, 1]]).unwrap();
    assert_eq!(sample_realization(&inst, 9).values(), &[r("1"), r("-2")]);
}

#[test]
fn generator_params_json() {
    let text = r#"{"family":"thm22","n":4,"tau":"1/2","eps":"1/100"}"#;
    let p: GeneratorParams = parse_json(text).unwrap();
    let (inst, real) = p.generate().unwrap();
    assert_eq!(inst.n_intervals(), 5);
    assert!(real.is_none());
    let err = parse_json::<GeneratorParams>(r#"{"family":"thm22","n":4,"tau":"x","eps":"1/100"}"#).unwrap_err();
    assert!(err.to_string().contains("invalid rational \"x\""), "{err}");
}
