mod common;

use fdense_core::size_fn::a_coefficients;
use fdense_core::{Family, SizeFunction};

#[test]
fn a_coefficients_rebuild_f() {
    for n in 2..=64 {
        let mut fams = common::concave_families(n);
        fams.push(SizeFunction::plateau(n, 1));
        fams.push(SizeFunction::plateau(n, n / 2 + 1));
        for f in fams {
            let a = a_coefficients(&f, n).unwrap();
            for s in 0..=n {
                assert!(
                    common::close(a.reconstruct(s), f.value(s), 1e-9),
                    "{:?} n={n} s={s}",
                    f.family()
                );
                if let Some(e) = a.reconstruct_exact(s) {
                    assert_eq!(Some(e), f.exact(s));
                }
            }
        }
    }
}

#[test]
fn average_value_is_monotone() {
    let n = 40;
    for f in common::convex_families(n) {
        assert!((1..n)
            .all(|x| f.value(x + 1) / (x + 1) as f64 >= f.value(x) / x as f64 * (1.0 - 1e-12)));
    }
    for f in common::concave_families(n) {
        assert!((1..n)
            .all(|x| f.value(x + 1) / (x + 1) as f64 <= f.value(x) / x as f64 * (1.0 + 1e-12)));
    }
}

#[test]
fn power_family_is_convex_on_unit_steps() {
    for i in 0..=10 {
        let alpha = 1.0 + i as f64 / 10.0;
        let f = SizeFunction::new(Family::Power(alpha), 50).unwrap();
        assert!(f.classify(50).convex, "alpha = {alpha}");
    }
}
