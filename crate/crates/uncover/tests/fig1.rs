mod common;

use common::r;
use uncover::covering::{online_gamma, scale_factor, CoveringView, GreedyKind};
use uncover::instances::gen_fig1;
use uncover::offline::{bounds, check_feasible, exact_opt, offline_greedy, round_checks, verify_alpha_approx, DEFAULT_BUDGET};
use uncover::online::{run_detrhs, run_minset};

#[test]
fn gammas_match_hand_values() {
    let (inst, real) = gen_fig1();
    assert_eq!(online_gamma(&inst).unwrap(), r("1"));
    assert_eq!(scale_factor(&inst, Some(&real)).unwrap(), r("4"));
}

#[test]
fn residuals_and_greedy_values_at_wstar() {
    let (inst, real) = gen_fig1();
    assert_eq!(real.wstar(), Some(&r("17/4")));
    let view = CoveringView::parametric(&inst, r("1"));
    let cov = view.empty();
    let w = r("17/4");
    let (per, total) = view.residual_rhs(&cov, Some(&w));
    assert_eq!(per, vec![r("11/4"), r("11/4"), r("7/4"), r("5/4")]);
    assert_eq!(total, r("17/2"));
    assert_eq!(view.active_count(&cov, Some(&w)), 4);
    assert_eq!(view.greedy_value(GreedyKind::Gc, &cov, &[4], &real, Some(&w)).unwrap(), r("9/2"));
    assert_eq!(view.optimistic_value(GreedyKind::Gc, &cov, 7, Some(&w)), r("5/4"));
    assert_eq!(view.greedy_value(GreedyKind::Gc, &cov, &[7], &real, Some(&w)).unwrap(), r("1"));
}

#[test]
fn feasibility_examples() {
    let (inst, real) = gen_fig1();
    assert!(check_feasible(&inst, &real, &[0, 1, 4, 6]).unwrap());
    assert!(!check_feasible(&inst, &real, &[0, 1, 4]).unwrap());
    assert!(check_feasible(&inst, &real, &(0..8).collect::<Vec<_>>()).unwrap());
}

#[test]
fn optimum_is_four() {
    let (inst, real) = gen_fig1();
    let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap();
    assert_eq!(opt.opt_size, 4);
    assert_eq!(opt.opt_set, vec![0, 1, 4, 6]);
    assert_eq!(common::brute_opt(&inst, &real), 4);
}

#[test]
fn greedy_factor_is_six() {
    let (inst, real) = gen_fig1();
    let b = bounds(&inst, Some(&real)).unwrap();
    assert_eq!(b.grset, Some(6));
    let g = offline_greedy(&inst, &real).unwrap();
    assert!(check_feasible(&inst, &real, &g).unwrap());
    assert!(g.len() <= 8);
}

#[test]
fn general_algorithm_on_fig1() {
    let (inst, real) = gen_fig1();
    let t = run_minset(&inst, &real).unwrap();
    assert!(check_feasible(&inst, &real, &t.queries).unwrap());
    let opt = exact_opt(&inst, &real, DEFAULT_BUDGET).unwrap().opt_size;
    for v in verify_alpha_approx(&inst, &real, &t, &r("2"), opt).unwrap() {
        assert!(v.passed, "{v:?}");
    }
    for c in round_checks(&inst, &t).unwrap() {
        assert!(c.count_ok && c.growth_ok, "{c:?}");
    }
}

#[test]
fn fixed_rhs_on_fig1() {
    let (inst, real) = gen_fig1();
    let det = inst.with_rhs(vec![r("11/4"), r("11/4"), r("7/4"), r("5/4")]).unwrap();
    let t = run_detrhs(&det, &real).unwrap();
    assert!(check_feasible(&det, &real, &t.queries).unwrap());
    assert!(!t.infeasible);
    let opt = exact_opt(&det, &real, DEFAULT_BUDGET).unwrap().opt_size;
    for v in verify_alpha_approx(&det, &real, &t, &r("2"), opt).unwrap() {
        assert!(v.passed, "{v:?}");
    }
}

#[test]
fn set_values_and_limits() {
    let (inst, real) = gen_fig1();
    assert_eq!(real.set_values(), &[r("17/4"), r("5"), r("25/4"), r("13/2")]);
    assert_eq!((inst.set_lower(1), inst.set_upper(1)), (r("3/2"), r("12")));
    assert_eq!((inst.set_lower(2), inst.set_upper(2)), (r("5/2"), r("12")));
    let mut st = uncover::model::QueryState::new(&inst, &real).unwrap();
    assert_eq!(st.query(4).unwrap(), vec![r("4")]);
    assert_eq!(*st.set_lower(1), r("9/2"));
    let st = uncover::model::QueryState::with_queries(&inst, &real, &[0, 1]).unwrap();
    assert_eq!(*st.set_lower(1), r("3/2"));
    assert!(!st.is_solved_minset().unwrap());
    assert_eq!(uncover::model::balancing_tau(&inst), r("1/2"));
}

#[test]
fn search_edge_cases() {
    let (inst, real) = gen_fig1();
    let view = CoveringView::parametric(&inst, r("1"));
    let cov = view.empty();
    let cands: Vec<usize> = (0..8).collect();
    let w = r("17/4");
    let hi = uncover::covering::Bound::Closed(w.clone());
    assert_eq!(view.min_w_reaching(GreedyKind::Gc, &cov, &cands, &r("9/2"), &w, &hi), Some((w.clone(), 3)));
    assert_eq!(view.min_w_reaching(GreedyKind::Gc, &cov, &cands, &r("1000"), &r("0"), &hi), None);
    let _ = real;
}
