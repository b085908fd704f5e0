//! Lefschetz elements reported with a "holds" verdict really are Lefschetz
//! elements.

use apery_core::algebra::build_algebra;
use apery_core::inverse::mixed_hessian;
use apery_core::lefschetz::{
    slp_by_hessian_with, slp_by_ranks_with, verify_rank_witness, wlp_by_hessian_with,
    wlp_by_ranks_with,
};
use apery_core::seed::task_rng;
use apery_core::{DualAlgebraView, GradedAlgebra, LefschetzReport, RatMatrix, SweepConfig, Q};

/// Rank of `×L^power: A_d → A_{d+power}` at `L = Σ a_i x_i`.
fn power_rank(alg: &GradedAlgebra, a: &[Q], d: usize, power: usize) -> usize {
    let mut m = RatMatrix::identity(alg.dim_at(d));
    for e in d..d + power {
        m = alg.specialized_map(a, e).mul(&m);
    }
    m.rank()
}

fn check_rank_report(alg: &GradedAlgebra, r: &LefschetzReport) {
    let a = r.witness_values().expect("holds implies a witness");
    assert!(verify_rank_witness(alg, r, &a));
    for map in &r.maps {
        let rank = power_rank(alg, &a, map.from_degree, map.power);
        assert!(rank >= map.generic_rank, "{map:?}");
        if map.decisive {
            assert_eq!(rank, map.required_rank, "{map:?}");
        }
    }
}

fn check_hessian_report(view: &DualAlgebraView, r: &LefschetzReport) {
    let a = r.witness_values().expect("holds implies a witness");
    let f = view.generator();
    assert_ne!(f.eval(&a), Q::from_integer(0.into()));
    for h in &r.hessians {
        let m = mixed_hessian(f, h.d, h.t, view.basis(h.d), view.basis(h.t)).unwrap();
        assert_eq!(m.matrix.eval(&a).rank(), h.required_rank);
    }
    // The same point is a Lefschetz element of Q/Ann(F): ×L^{D−2d} at a is
    // an isomorphism for every Hessian checked on the diagonal.
    let alg = view.to_graded().unwrap();
    let top = view.socle_degree();
    for h in r.hessians.iter().filter(|h| h.d == h.t) {
        assert_eq!(power_rank(&alg, &a, h.d, top - 2 * h.d), alg.dim_at(h.d));
    }
}

#[test]
fn witnesses_are_lefschetz_elements() {
    let mut config = SweepConfig::new(3..=14, 28, 3..=4);
    config.require_m_pure = true;
    let mut checked = 0;
    for sg in config.semigroups().unwrap() {
        let mut rng = task_rng(1, sg.generators());
        let table = sg.apery_set();
        let alg = build_algebra(&table).to_graded();
        let view = DualAlgebraView::from_apery(&table).unwrap();
        for r in [
            wlp_by_ranks_with(&alg, &mut rng),
            slp_by_ranks_with(&alg, &mut rng),
        ] {
            if r.holds() {
                check_rank_report(&alg, &r);
                checked += 1;
            }
        }
        for r in [
            wlp_by_hessian_with(&view, &mut rng),
            slp_by_hessian_with(&view, &mut rng),
        ] {
            if r.holds() {
                check_hessian_report(&view, &r);
                checked += 1;
            }
        }
    }
    assert!(checked > 200, "{checked}");
}

#[test]
fn non_gorenstein_reports_use_every_map() {
    let sg = apery_core::NumericalSemigroup::new(&[3, 4, 5]).unwrap();
    let alg = build_algebra(&sg.apery_set()).to_graded();
    let r = slp_by_ranks_with(&alg, &mut task_rng(0, &[3, 4, 5]));
    assert!(!r.gorenstein);
    assert!(r.maps.iter().all(|m| m.decisive));
    if r.holds() {
        check_rank_report(&alg, &r);
    }
}
