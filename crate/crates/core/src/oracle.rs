//! Exhaustive ground truth over all 2^n vertex subsets (n <= 24).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{Exact, Graph, VertexSet, Weight};
use crate::hull::{upper_hull, FrontierPoint};
use crate::size_fn::SizeFunction;
use crate::solution::{compare_density, exact_density, Solution, Solver};

pub const MAX_ORACLE_N: usize = 24;

/// Maximum-weight subset of one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeBest {
    pub weight: Weight,
    /// Lexicographically smallest subset attaining `weight`.
    pub witness: VertexSet,
}

/// Exact f-DS optimum.
#[derive(Debug, Clone, PartialEq)]
pub struct FdsOptimum {
    pub value: f64,
    pub exact: Option<Exact>,
    /// Lexicographically smallest optimal subset.
    pub witness: VertexSet,
    /// Every size at which some optimal subset exists.
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct OracleReport {
    scale: i64,
    best_units: Vec<i64>,
    pub best_per_size: Vec<SizeBest>,
    pub fds_optimum: Option<FdsOptimum>,
    pub frontier: Vec<FrontierPoint>,
}

fn mask_to_set(mask: u64) -> VertexSet {
    VertexSet::new((0..64).filter(|&v| mask >> v & 1 == 1).collect())
}

/// True when the sorted member list of `a` precedes that of `b`.
fn lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let x = (a ^ b).trailing_zeros();
    let above = |m: u64| x < 63 && (m >> x >> 1) != 0;
    if a >> x & 1 == 1 {
        above(b)
    } else {
        !above(a)
    }
}

/// Scans every subset in Gray-code order, tracking the heaviest subset of each size.
pub fn enumerate(g: &Graph, f: Option<&SizeFunction>) -> Result<OracleReport> {
    let n = g.n();
    if n > MAX_ORACLE_N {
        return Err(Error::BudgetExceeded(format!(
            "oracle enumeration needs n <= {MAX_ORACLE_N}, got {n}"
        )));
    }
    let adjacency: Vec<Vec<(usize, i64)>> =
        (0..n).map(|v| g.neighbors_units(v).collect()).collect();

    let mut best_units = vec![i64::MIN; n + 1];
    let mut best_mask = vec![0u64; n + 1];
    best_units[0] = 0;

    let mut mask: u64 = 0;
    let mut units: i64 = 0;
    for i in 1u64..(1u64 << n) {
        let v = i.trailing_zeros() as usize;
        let gain: i64 = adjacency[v]
            .iter()
            .filter(|&&(u, _)| mask >> u & 1 == 1)
            .map(|&(_, w)| w)
            .sum();
        if mask >> v & 1 == 1 {
            mask &= !(1 << v);
            units -= gain;
        } else {
            mask |= 1 << v;
            units += gain;
        }
        let size = mask.count_ones() as usize;
        if units > best_units[size]
            || (units == best_units[size] && lex_less(mask, best_mask[size]))
        {
            best_units[size] = units;
            best_mask[size] = mask;
        }
    }

    let best_per_size = (0..=n)
        .map(|i| SizeBest {
            weight: g.to_weight(best_units[i]),
            witness: mask_to_set(best_mask[i]),
        })
        .collect::<Vec<_>>();
    let points: Vec<(usize, i64)> = best_units.iter().copied().enumerate().collect();
    let frontier = upper_hull(&points)
        .into_iter()
        .map(|i| FrontierPoint {
            size: i,
            weight: best_per_size[i].weight,
            witness: best_per_size[i].witness.clone(),
        })
        .collect();

    let mut report = OracleReport {
        scale: g.scale(),
        best_units,
        best_per_size,
        fds_optimum: None,
        frontier,
    };
    if let Some(f) = f {
        report.fds_optimum = Some(report.optimum_for(f)?);
    }
    Ok(report)
}

impl OracleReport {
    pub fn n(&self) -> usize {
        self.best_units.len() - 1
    }

    /// max w(S) over |S| = i, in units of 1/scale.
    pub fn best_units(&self, i: usize) -> i64 {
        self.best_units[i]
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// Exact f-DS optimum for `f`, reusing the per-size maxima.
    pub fn optimum_for(&self, f: &SizeFunction) -> Result<FdsOptimum> {
        let n = self.n();
        f.check_admissible(n)?;
        let first = if f.value(1) > 0.0 { 1 } else { 2 };
        let mut best = first;
        for i in first..=n {
            if compare_density(
                self.scale,
                f,
                (self.best_units[i], i),
                (self.best_units[best], best),
            ) == Ordering::Greater
            {
                best = i;
            }
        }
        let sizes: Vec<usize> = (first..=n)
            .filter(|&i| {
                compare_density(
                    self.scale,
                    f,
                    (self.best_units[i], i),
                    (self.best_units[best], best),
                ) == Ordering::Equal
            })
            .collect();
        let witness = sizes
            .iter()
            .map(|&i| self.best_per_size[i].witness.clone())
            .min()
            .expect("at least one optimal size");
        Ok(FdsOptimum {
            value: self.best_units[best] as f64 / self.scale as f64 / f.value(best),
            exact: exact_density(self.scale, f, self.best_units[best], best),
            witness,
            sizes,
        })
    }

    /// The optimum as a [`Solution`].
    pub fn solution_for(&self, f: &SizeFunction) -> Result<Solution> {
        let opt = self.optimum_for(f)?;
        let units = self.best_units[opt.witness.len()];
        Ok(Solution::from_units(
            self.scale,
            f,
            opt.witness,
            units,
            Solver::Oracle,
        ))
    }

    /// min over all S of (beta f(|S|) - w(S)), the empty set included.
    pub fn min_threshold_objective(&self, f: &SizeFunction, beta: f64) -> f64 {
        (0..=self.n())
            .map(|i| beta * f.value(i) - self.best_units[i] as f64 / self.scale as f64)
            .fold(f64::INFINITY, f64::min)
    }

    /// max w(S)/|S| over subsets with `lo <= |S| <= hi` (and |S| >= 1).
    pub fn max_average_degree_between(&self, lo: usize, hi: usize) -> f64 {
        (lo.max(1)..=hi.min(self.n()))
            .map(|i| self.best_units[i] as f64 / self.scale as f64 / i as f64)
            .fold(0.0, f64::max)
    }
}

/// w(S_i*)/C(i, 2) is non-increasing in i for 2 <= i <= n.
pub fn check_edge_density_monotone(report: &OracleReport) -> bool {
    let pairs = |i: usize| (i * (i - 1) / 2) as i128;
    (2..report.n()).all(|i| {
        // w_i / C(i,2) >= w_{i+1} / C(i+1,2)
        report.best_units(i) as i128 * pairs(i + 1) >= report.best_units(i + 1) as i128 * pairs(i)
    })
}
