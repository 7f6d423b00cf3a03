mod common;

use fdense_core::convex::{brute_force_prefix, solve_convex};
use fdense_core::oracle::enumerate;
use fdense_core::peel::{best_suffix, peel};
use fdense_core::{Family, SizeFunction};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn certificate_is_sound(g in common::weighted(12), k in 2usize..4) {
        let n = g.n();
        let report = enumerate(&g, None).unwrap();
        for f in common::convex_families(n) {
            let sol = solve_convex(&g, &f, k.min(n)).unwrap();
            let opt = report.optimum_for(&f).unwrap().value;
            let cert = sol.certificate.as_ref().unwrap();
            prop_assert!(common::at_least(cert.ratio() * sol.density, opt, 1e-9));
            if let Some(c) = &cert.corollary {
                prop_assert!(common::at_least(c.ratio * sol.density, opt, 1e-9));
            }
        }
    }

    #[test]
    fn dominates_its_parts(g in common::weighted(12), k in 2usize..4) {
        let n = g.n();
        let k = k.min(n);
        let order = peel(&g);
        let prefix = brute_force_prefix(&g, k).unwrap();
        for f in common::convex_families(n) {
            let sol = solve_convex(&g, &f, k).unwrap();
            prop_assert!(common::at_least(sol.density, best_suffix(&order, &f).unwrap().density, 1e-12));
            for p in &prefix {
                let d = *p.weight.numer() as f64 / *p.weight.denom() as f64 / f.value(p.size);
                prop_assert!(common::at_least(sol.density, d, 1e-12));
            }
        }
    }

    #[test]
    fn convex_optima_are_no_larger_than_densest(g in common::weighted(12)) {
        let n = g.n();
        let report = enumerate(&g, None).unwrap();
        let lin = SizeFunction::new(Family::Linear, n).unwrap();
        let ds = report.optimum_for(&lin).unwrap().witness.len() as f64;
        for f in common::convex_families(n) {
            let s = report.optimum_for(&f).unwrap().witness.len();
            prop_assert!(f.value(s) / s as f64 <= f.value(ds as usize) / ds * (1.0 + 1e-9));
        }
    }
}
