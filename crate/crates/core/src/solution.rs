//! Solver output and density comparison.

use alloc::string::String;
use core::cmp::Ordering;

use crate::graph::{Exact, Graph, VertexSet, Weight};
use crate::size_fn::{exact_to_f64, SizeFunction};

/// Which algorithm produced a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Solver {
    Peel,
    BruteForce,
    FlowExact,
    FlowApprox { epsilon: f64 },
    LpExact,
    Oracle,
}

impl Solver {
    pub fn as_str(&self) -> &'static str {
        match self {
            Solver::Peel => "peel",
            Solver::BruteForce => "brute",
            Solver::FlowExact => "flow-exact",
            Solver::FlowApprox { .. } => "flow-approx",
            Solver::LpExact => "lp-exact",
            Solver::Oracle => "oracle",
        }
    }
}

/// A-priori approximation guarantee attached by the convex solver.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    /// Worst case over s = 2..n of the instance bound min{brute-force term, peeling term}.
    pub bound: f64,
    /// Brute-force depth the bound was computed for.
    pub k: usize,
    /// Closed-form family bound, when the family has one.
    pub corollary: Option<Corollary>,
}

impl Certificate {
    /// The tighter of the instance bound and the closed form.
    pub fn ratio(&self) -> f64 {
        match &self.corollary {
            Some(c) => self.bound.min(c.ratio),
            None => self.bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Corollary {
    /// Human-readable formula, e.g. `2*n^((a-1)(2-a))`.
    pub formula: String,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub subset: VertexSet,
    pub weight: Weight,
    pub f_value: f64,
    pub density: f64,
    /// Exact density when f is rational-valued.
    pub exact_density: Option<Exact>,
    pub solver: Solver,
    pub certificate: Option<Certificate>,
}

impl Solution {
    pub(crate) fn from_units(
        scale: i64,
        f: &SizeFunction,
        subset: VertexSet,
        units: i64,
        solver: Solver,
    ) -> Self {
        let size = subset.len();
        let weight = Weight::new(units, scale);
        let f_value = f.value(size);
        Solution {
            density: units as f64 / scale as f64 / f_value,
            exact_density: exact_density(scale, f, units, size),
            subset,
            weight,
            f_value,
            solver,
            certificate: None,
        }
    }

    /// Evaluates an arbitrary subset.
    pub fn evaluate(g: &Graph, f: &SizeFunction, subset: VertexSet, solver: Solver) -> Self {
        let units = g.induced_units(&subset);
        Solution::from_units(g.scale(), f, subset, units, solver)
    }

    pub fn size(&self) -> usize {
        self.subset.len()
    }

    /// Best available value of the density as `f64`.
    pub fn value(&self) -> f64 {
        match &self.exact_density {
            Some(e) => exact_to_f64(e),
            None => self.density,
        }
    }
}

/// Exact w(S)/f(|S|) for `units / scale` weight, if f is rational and nothing overflows.
pub(crate) fn exact_density(
    scale: i64,
    f: &SizeFunction,
    units: i64,
    size: usize,
) -> Option<Exact> {
    let fx = f.exact(size)?;
    if *fx.numer() == 0 {
        return None;
    }
    let num = i128::from(units).checked_mul(*fx.denom())?;
    let den = i128::from(scale).checked_mul(*fx.numer())?;
    Some(Exact::new(num, den))
}

/// Compares the f-densities of two (weight units, size) pairs of the same graph.
///
/// Rational f compares exactly; otherwise values within the relative tolerance
/// of `f` compare equal.
pub(crate) fn compare_density(
    scale: i64,
    f: &SizeFunction,
    a: (i64, usize),
    b: (i64, usize),
) -> Ordering {
    if let (Some(x), Some(y)) = (
        exact_density(scale, f, a.0, a.1),
        exact_density(scale, f, b.0, b.1),
    ) {
        return x.cmp(&y);
    }
    let da = a.0 as f64 / f.value(a.1);
    let db = b.0 as f64 / f.value(b.1);
    approx_cmp(da, db, f.tol())
}

pub(crate) fn approx_cmp(a: f64, b: f64, tol: f64) -> Ordering {
    if (a - b).abs() <= tol * a.abs().max(b.abs()) {
        Ordering::Equal
    } else if a < b {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Running best candidate: higher density wins, ties go to the
/// lexicographically smaller set.
#[derive(Debug, Clone)]
pub(crate) struct Best {
    pub units: i64,
    pub subset: VertexSet,
}

impl Best {
    pub(crate) fn offer(
        slot: &mut Option<Best>,
        scale: i64,
        f: &SizeFunction,
        units: i64,
        subset: VertexSet,
    ) -> bool {
        let better = match slot {
            None => true,
            Some(cur) => {
                match compare_density(
                    scale,
                    f,
                    (units, subset.len()),
                    (cur.units, cur.subset.len()),
                ) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => subset < cur.subset,
                }
            }
        };
        if better {
            *slot = Some(Best { units, subset });
        }
        better
    }
}
