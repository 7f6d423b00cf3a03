mod common;

use fdense_core::oracle::enumerate;
use fdense_core::peel::{best_suffix, peel};
use fdense_core::{Family, SizeFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn concave_three_approximation(g in common::weighted(12)) {
        let n = g.n();
        let report = enumerate(&g, None).unwrap();
        let order = peel(&g);
        for f in common::concave_families(n) {
            let got = best_suffix(&order, &f).unwrap().density;
            let opt = report.optimum_for(&f).unwrap().value;
            prop_assert!(common::at_least(3.0 * got, opt, 1e-9));
        }
    }

    #[test]
    fn convex_guarantee(g in common::weighted(12)) {
        let n = g.n();
        let report = enumerate(&g, None).unwrap();
        let order = peel(&g);
        for f in common::convex_families(n) {
            let got = best_suffix(&order, &f).unwrap().density;
            let opt = report.optimum_for(&f).unwrap();
            let s = opt.witness.len();
            let factor = 2.0 * f.value(n) / n as f64 / (f.value(s) - f.value(s - 1));
            prop_assert!(common::at_least(got * factor, opt.value, 1e-9));
        }
    }

    #[test]
    fn dal_k_suffix_bound(g in common::weighted(12)) {
        let n = g.n();
        let report = enumerate(&g, None).unwrap();
        let order = peel(&g);
        let avg = |i: usize| {
            let w = order.suffix_weight(i);
            *w.numer() as f64 / *w.denom() as f64 / i as f64
        };
        for k in 1..=n {
            let best = (k..=n).map(avg).fold(0.0, f64::max);
            prop_assert!(common::at_least(3.0 * best, report.max_average_degree_between(k, n), 1e-9));
        }
    }

    #[test]
    fn order_is_a_permutation(g in common::weighted(30)) {
        let mut o = peel(&g).order().to_vec();
        o.sort_unstable();
        prop_assert_eq!(o, (0..g.n()).collect::<Vec<_>>());
        let lin = SizeFunction::new(Family::Linear, g.n()).unwrap();
        prop_assert!(best_suffix(&peel(&g), &lin).unwrap().size() >= 2);
    }
}
