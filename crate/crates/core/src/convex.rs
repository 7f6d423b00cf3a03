//! Approximation for convex size functions: the better of a brute-force
//! search over small subsets and greedy peeling.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Weight};
use crate::peel::{best_suffix, peel};
use crate::size_fn::{Family, SizeFunction};
use crate::solution::{compare_density, Best, Certificate, Corollary, Solution, Solver};

/// Enumeration budget for [`brute_force_prefix`] with k >= 3.
pub const ENUMERATION_BUDGET: f64 = 1e8;

/// Maximum-weight subset of one size, found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixBest {
    pub size: usize,
    pub subset: VertexSet,
    pub weight: Weight,
}

struct Search<'g> {
    g: &'g Graph,
    inside: Vec<bool>,
    chosen: Vec<usize>,
    best_units: i64,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, start: usize, left: usize, units: i64) {
        if left == 0 {
            if units > self.best_units {
                self.best_units = units;
                self.best.clone_from(&self.chosen);
            }
            return;
        }
        let n = self.g.n();
        for v in start..=n - left {
            let gain: i64 = self
                .g
                .neighbors_units(v)
                .filter(|&(u, _)| self.inside[u])
                .map(|(_, w)| w)
                .sum();
            self.inside[v] = true;
            self.chosen.push(v);
            self.run(v + 1, left - 1, units + gain);
            self.chosen.pop();
            self.inside[v] = false;
        }
    }
}

/// S_i* = a maximum-weight subset with exactly i vertices, for i = 2..=k.
/// Ties resolve to the lexicographically smallest subset.
pub fn brute_force_prefix(g: &Graph, k: usize) -> Result<Vec<PrefixBest>> {
    let n = g.n();
    if k < 2 || k > n {
        return Err(Error::InvalidParameter(format!("k = {k} outside [2, {n}]")));
    }
    if k >= 3 && libm::pow(n as f64, k as f64) > ENUMERATION_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "n^k = {n}^{k} exceeds {ENUMERATION_BUDGET:e}"
        )));
    }
    let (edge, weight) = g.heaviest_edge();
    let mut out = vec![PrefixBest {
        size: 2,
        subset: edge,
        weight,
    }];
    for size in 3..=k {
        let mut search = Search {
            g,
            inside: vec![false; n],
            chosen: Vec::with_capacity(size),
            best_units: i64::MIN,
            best: Vec::new(),
        };
        search.run(0, size, 0);
        out.push(PrefixBest {
            size,
            subset: VertexSet::new(search.best),
            weight: g.to_weight(search.best_units),
        });
    }
    Ok(out)
}

fn units_of(g: &Graph, w: Weight) -> i64 {
    *w.numer() * (g.scale() / *w.denom())
}

/// Instance bound max over s = 2..n of min{brute-force term, peeling term}.
pub fn certificate_bound(f: &SizeFunction, n: usize, k: usize) -> f64 {
    let fk = f.value(k);
    let fnn = f.value(n);
    (2..=n)
        .map(|s| {
            let fs = f.value(s);
            let brute = if s <= k {
                1.0
            } else {
                (2.0 * fk / (k * k) as f64) / (fs / (s * s) as f64)
            };
            let step = fs - f.value(s - 1);
            let peel = if step > 0.0 {
                (2.0 * fnn / n as f64) / step
            } else {
                f64::INFINITY
            };
            brute.min(peel)
        })
        .fold(1.0, f64::max)
}

/// Closed-form ratio for the built-in convex families.
pub fn corollary(f: &SizeFunction, n: usize, k: usize) -> Option<Corollary> {
    match f.family() {
        Family::Linear => Some(Corollary {
            formula: "2".to_string(),
            ratio: 2.0,
        }),
        Family::Power(alpha) => Some(Corollary {
            formula: format!("2*n^((a-1)(2-a)), a={alpha}"),
            ratio: 2.0 * libm::pow(n as f64, (alpha - 1.0) * (2.0 - alpha)),
        }),
        Family::ConvexCombo(lambda) => {
            let l = lambda.to_f64()?;
            Some(Corollary {
                formula: format!("2+2l/((1-l)k), l={lambda}, k={k}"),
                ratio: 2.0 + 2.0 * l / ((1.0 - l) * k as f64),
            })
        }
        Family::Ratio(lambda) => {
            let l = lambda.to_f64()?;
            Some(Corollary {
                formula: format!("4/(1+l), l={lambda}"),
                ratio: 4.0 / (1.0 + l),
            })
        }
        _ => None,
    }
}

/// Better of greedy peeling and brute force over sizes 2..=k, with an
/// approximation certificate.
pub fn solve_convex(g: &Graph, f: &SizeFunction, k: usize) -> Result<Solution> {
    let n = g.n();
    f.check_admissible(n)?;
    if let Some(x) = f.convexity_violation(n) {
        return Err(Error::NotConvex(x));
    }
    let peeled = best_suffix(&peel(g), f)?;
    let prefix = brute_force_prefix(g, k)?;

    let mut brute: Option<Best> = None;
    for p in prefix {
        let units = units_of(g, p.weight);
        Best::offer(&mut brute, g.scale(), f, units, p.subset);
    }
    let brute = brute.expect("k >= 2 yields a candidate");
    let peel_units = units_of(g, peeled.weight);
    let brute_wins = match compare_density(
        g.scale(),
        f,
        (brute.units, brute.subset.len()),
        (peel_units, peeled.size()),
    ) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => brute.subset < peeled.subset,
    };
    let mut sol = if brute_wins {
        Solution::from_units(g.scale(), f, brute.subset, brute.units, Solver::BruteForce)
    } else {
        peeled
    };
    sol.certificate = Some(Certificate {
        bound: certificate_bound(f, n, k),
        k,
        corollary: corollary(f, n, k),
    });
    Ok(sol)
}

/// Smallest brute-force depth giving ratio 2 + eps for f(x) = lambda x + (1 - lambda) x^2.
pub fn epsilon_schedule_k(lambda: f64, eps: f64) -> Result<usize> {
    if !(0.0..1.0).contains(&lambda) {
        return Err(Error::InvalidParameter(format!(
            "lambda = {lambda} outside [0, 1)"
        )));
    }
    if eps <= 0.0 || !eps.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "eps = {eps} must be positive"
        )));
    }
    let k = (2.0 / eps) * lambda / (1.0 - lambda);
    Ok(libm::ceil(k.max(2.0) - 1e-9) as usize)
}
