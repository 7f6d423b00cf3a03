#![allow(dead_code)]

use fdense_core::{generate, Exact, Family, Graph, SizeFunction};
use num_rational::Ratio;
use proptest::prelude::*;

/// Random unweighted G(n, p) with at least one edge.
pub fn unweighted(max_n: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n, 0.2f64..0.8, any::<u64>()).prop_filter_map("graph without edges", |(n, p, seed)| {
        generate::gnp(n, p, seed).ok()
    })
}

/// Random G(n, p) with weights j/100, j in 1..=1000.
pub fn weighted(max_n: usize) -> impl Strategy<Value = Graph> {
    (unweighted(max_n), any::<u64>()).prop_map(|(g, seed)| generate::with_random_weights(&g, seed))
}

pub fn concave_families(n: usize) -> Vec<SizeFunction> {
    vec![
        SizeFunction::new(Family::Linear, n).unwrap(),
        SizeFunction::sqrt(n),
        SizeFunction::log1p(n),
        SizeFunction::plateau(n, 3),
        bent(n),
    ]
}

pub fn convex_families(n: usize) -> Vec<SizeFunction> {
    let mut out = Vec::new();
    for a in [1.0, 1.25, 1.5, 1.75, 2.0] {
        out.push(SizeFunction::new(Family::Power(a), n).unwrap());
    }
    for (p, q) in [(0, 1), (1, 2), (9, 10)] {
        out.push(SizeFunction::new(Family::ConvexCombo(Ratio::new(p, q)), n).unwrap());
    }
    for (p, q) in [(0, 1), (1, 2), (1, 1)] {
        out.push(SizeFunction::new(Family::Ratio(Ratio::new(p, q)), n).unwrap());
    }
    out
}

/// a >= b within relative tolerance.
pub fn at_least(a: f64, b: f64, tol: f64) -> bool {
    a >= b - tol * a.abs().max(b.abs()).max(1.0)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

/// Rational concave table: x up to 2, then slope 1/2.
pub fn bent(n: usize) -> SizeFunction {
    let t = (0..=n as i128)
        .map(|x| {
            if x <= 2 {
                Exact::from_integer(x)
            } else {
                Exact::new(x + 2, 2)
            }
        })
        .collect();
    SizeFunction::new(Family::RationalTable(t), n).unwrap()
}
