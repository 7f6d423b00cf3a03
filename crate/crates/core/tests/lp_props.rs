mod common;

use fdense_core::flow::solve_unweighted_exact;
use fdense_core::lp::{build_lp, dense_frontier, lp_candidates, solve_lp};
use fdense_core::oracle::enumerate;
use fdense_core::{Exact, SizeFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lp_bounds_every_subset(g in common::weighted(9)) {
        let report = enumerate(&g, None).unwrap();
        for k in 1..=g.n() {
            let lp = solve_lp(&build_lp(&g, k).unwrap()).unwrap();
            let best = Exact::new(i128::from(report.best_units(k)), i128::from(report.scale()));
            prop_assert!(lp.objective >= best);
            prop_assert_eq!(lp.y.iter().copied().sum::<Exact>(), Exact::from_integer(k as i128));
        }
    }

    #[test]
    fn lp_matches_enumeration_and_flow(g in common::unweighted(10)) {
        let report = enumerate(&g, None).unwrap();
        let cands = lp_candidates(&g).unwrap();
        for f in common::concave_families(g.n()) {
            let got = cands.best(&f).unwrap();
            let opt = report.optimum_for(&f).unwrap();
            let flow = solve_unweighted_exact(&g, &f).unwrap();
            match (got.exact_density, opt.exact, flow.exact_density) {
                (Some(a), Some(b), Some(c)) => {
                    prop_assert_eq!(a, b);
                    prop_assert_eq!(a, c);
                }
                _ => {
                    prop_assert!(common::close(got.density, opt.value, 1e-9));
                    prop_assert!(common::close(got.density, flow.density, 1e-9));
                }
            }
        }
    }

    #[test]
    fn strictly_concave_optimum_is_a_frontier_point(g in common::weighted(10)) {
        let frontier = dense_frontier(&g).unwrap();
        let cands = lp_candidates(&g).unwrap();
        for f in [SizeFunction::sqrt(g.n()), SizeFunction::log1p(g.n())] {
            let s = cands.best(&f).unwrap();
            prop_assert!(frontier.iter().any(|p| p.size == s.size() && p.weight == s.weight));
        }
    }

    #[test]
    fn hull_slopes_strictly_decrease(g in common::weighted(12)) {
        let fr = dense_frontier(&g).unwrap();
        let slope = |i: usize| {
            let dw = fr[i + 1].weight - fr[i].weight;
            dw / fdense_core::Weight::from_integer((fr[i + 1].size - fr[i].size) as i64)
        };
        for i in 0..fr.len().saturating_sub(2) {
            prop_assert!(slope(i) > slope(i + 1));
        }
        prop_assert!(fr.iter().skip(1).all(|p| p.weight > fdense_core::Weight::from_integer(0)));
    }
}
