//! The relaxation LP_k and its level-set rounding.
//!
//! LP_k: maximize sum_e w(e) x_e subject to x_e <= y_u, x_e <= y_v for every
//! edge {u, v}, 0 <= y_v <= 1 and sum_v y_v = k. For monotone concave f some
//! level set {v : y_v >= r} of an optimal LP_k solution is an f-densest
//! subgraph when k is the size of one, and every dense frontier point is
//! realized by such a level set.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{Exact, Graph, VertexSet, Weight};
use crate::hull::{upper_hull, FrontierPoint};
use crate::simplex::{maximize, Constraint, Field, LinearProgram, Relation, SimplexError};
use crate::size_fn::{a_coefficients, Family, SizeFunction};
use crate::solution::{Best, Solution, Solver};

/// LP_k for a fixed graph. Variables are x_e in edge order followed by y_v.
#[derive(Debug, Clone, PartialEq)]
pub struct LpInstance {
    k: usize,
    n: usize,
    edges: Vec<(usize, usize, Weight)>,
}

impl LpInstance {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn variable_count(&self) -> usize {
        self.m() + self.n
    }

    /// Edge rows plus the size row; the bounds y_v <= 1 are counted separately.
    pub fn row_count(&self) -> usize {
        2 * self.m() + 1
    }

    pub fn edges(&self) -> &[(usize, usize, Weight)] {
        &self.edges
    }

    /// The instance as a generic linear program over `F`.
    pub fn program<F: Field>(&self) -> LinearProgram<F> {
        let (m, n) = (self.m(), self.n);
        let one = F::from_ratio(1, 1);
        let minus = F::from_ratio(-1, 1);
        let mut objective: Vec<F> = self
            .edges
            .iter()
            .map(|(_, _, w)| F::from_ratio(*w.numer(), *w.denom()))
            .collect();
        objective.resize(m + n, F::zero());
        let mut constraints = Vec::with_capacity(2 * m + n + 1);
        for (e, &(u, v, _)) in self.edges.iter().enumerate() {
            for end in [u, v] {
                constraints.push(Constraint {
                    coeffs: alloc::vec![(e, one.clone()), (m + end, minus.clone())],
                    relation: Relation::Le,
                    rhs: F::zero(),
                });
            }
        }
        for v in 0..n {
            constraints.push(Constraint {
                coeffs: alloc::vec![(m + v, one.clone())],
                relation: Relation::Le,
                rhs: one.clone(),
            });
        }
        constraints.push(Constraint {
            coeffs: (0..n).map(|v| (m + v, one.clone())).collect(),
            relation: Relation::Eq,
            rhs: F::from_ratio(self.k as i64, 1),
        });
        LinearProgram {
            vars: m + n,
            objective,
            constraints,
        }
    }
}

/// Builds LP_k; requires 1 <= k <= n.
pub fn build_lp(g: &Graph, k: usize) -> Result<LpInstance> {
    if k == 0 || k > g.n() {
        return Err(Error::InvalidParameter(format!(
            "k = {k} outside 1..={}",
            g.n()
        )));
    }
    Ok(LpInstance {
        k,
        n: g.n(),
        edges: g.edges().collect(),
    })
}

/// Optimal LP_k solution with x_e = min{y_u, y_v}.
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<Exact>,
    pub y: Vec<Exact>,
    pub objective: Exact,
}

/// Anything that solves LP_k exactly.
pub trait LpBackend {
    fn solve(&self, inst: &LpInstance) -> Result<LpSolution>;
}

/// Built-in backend: exact simplex in `Ratio<i128>`, repeated in arbitrary
/// precision if an intermediate value overflows.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalSimplex;

fn big_to_exact(x: &BigRational) -> Result<Exact> {
    match (x.numer().to_i128(), x.denom().to_i128()) {
        (Some(p), Some(q)) => Ok(Exact::new(p, q)),
        _ => Err(Error::WeightOverflow),
    }
}

fn simplex_error(e: SimplexError) -> Error {
    match e {
        SimplexError::Overflow => Error::WeightOverflow,
        other => Error::InvalidParameter(format!("linear program failed: {other:?}")),
    }
}

impl LpBackend for RationalSimplex {
    fn solve(&self, inst: &LpInstance) -> Result<LpSolution> {
        let y: Vec<Exact> = match maximize::<Ratio<i128>>(&inst.program()) {
            Ok(o) => o.x[inst.m()..].to_vec(),
            Err(SimplexError::Overflow) => {
                let o = maximize::<Ratio<BigInt>>(&inst.program()).map_err(simplex_error)?;
                o.x[inst.m()..]
                    .iter()
                    .map(big_to_exact)
                    .collect::<Result<_>>()?
            }
            Err(e) => return Err(simplex_error(e)),
        };
        Ok(normalized(inst, y))
    }
}

fn normalized(inst: &LpInstance, y: Vec<Exact>) -> LpSolution {
    let x: Vec<Exact> = inst.edges.iter().map(|&(u, v, _)| y[u].min(y[v])).collect();
    let objective = inst
        .edges
        .iter()
        .zip(&x)
        .fold(Exact::zero(), |acc, (&(_, _, w), xe)| {
            acc + Exact::new(i128::from(*w.numer()), i128::from(*w.denom())) * xe
        });
    LpSolution { x, y, objective }
}

pub fn solve_lp(inst: &LpInstance) -> Result<LpSolution> {
    RationalSimplex.solve(inst)
}

/// Distinct level sets {v : y_v >= r} for r over the values of y, largest r first.
pub fn level_sets(y: &[Exact]) -> Vec<VertexSet> {
    let mut order: Vec<usize> = (0..y.len()).collect();
    order.sort_by(|&a, &b| y[b].cmp(&y[a]).then(a.cmp(&b)));
    let mut sets = Vec::new();
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j < order.len() && y[order[j]] == y[order[i]] {
            j += 1;
        }
        sets.push(VertexSet::new(order[..j].to_vec()));
        i = j;
    }
    sets
}

/// Best level set of `y` with at least two vertices.
pub fn sweep_levels(g: &Graph, f: &SizeFunction, y: &[Exact]) -> Result<Solution> {
    if y.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{} levels for {} vertices",
            y.len(),
            g.n()
        )));
    }
    f.check_admissible(g.n())?;
    let mut best = None;
    for s in level_sets(y).into_iter().filter(|s| s.len() >= 2) {
        let units = g.induced_units(&s);
        Best::offer(&mut best, g.scale(), f, units, s);
    }
    let b = best.ok_or(Error::NoCandidate)?;
    Ok(Solution::from_units(
        g.scale(),
        f,
        b.subset,
        b.units,
        Solver::LpExact,
    ))
}

/// Level sets of optimal LP_k solutions over all k, deduplicated.
///
/// The LP does not involve f, so one collection serves every size function.
#[derive(Debug, Clone)]
pub struct Candidates {
    scale: i64,
    sets: Vec<(i64, VertexSet)>,
}

impl Candidates {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn sets(&self) -> impl Iterator<Item = &VertexSet> + '_ {
        self.sets.iter().map(|(_, s)| s)
    }

    /// Best candidate with at least two vertices; exact for monotone concave f.
    pub fn best(&self, f: &SizeFunction) -> Result<Solution> {
        let mut best = None;
        for (units, s) in self.sets.iter().filter(|(_, s)| s.len() >= 2) {
            Best::offer(&mut best, self.scale, f, *units, s.clone());
        }
        let b = best.ok_or(Error::NoCandidate)?;
        Ok(Solution::from_units(
            self.scale,
            f,
            b.subset,
            b.units,
            Solver::LpExact,
        ))
    }

    /// Extreme points of the upper hull of the candidates' (size, weight)
    /// points and (0, 0); witnesses are the lexicographically smallest
    /// candidates of maximum weight per size.
    pub fn frontier(&self) -> Vec<FrontierPoint> {
        let mut per_size: BTreeMap<usize, (i64, &VertexSet)> = BTreeMap::new();
        let empty = VertexSet::empty();
        per_size.insert(0, (0, &empty));
        for (units, s) in &self.sets {
            let slot = per_size.entry(s.len()).or_insert((*units, s));
            if *units > slot.0 || (*units == slot.0 && s < slot.1) {
                *slot = (*units, s);
            }
        }
        let points: Vec<(usize, i64)> = per_size.iter().map(|(&k, &(u, _))| (k, u)).collect();
        let witnesses: Vec<&VertexSet> = per_size.values().map(|&(_, s)| s).collect();
        upper_hull(&points)
            .into_iter()
            .map(|i| FrontierPoint {
                size: points[i].0,
                weight: Weight::new(points[i].1, self.scale),
                witness: witnesses[i].clone(),
            })
            .collect()
    }
}

pub fn lp_candidates(g: &Graph) -> Result<Candidates> {
    lp_candidates_with(g, &RationalSimplex)
}

pub fn lp_candidates_with(g: &Graph, backend: &dyn LpBackend) -> Result<Candidates> {
    let mut seen: BTreeMap<VertexSet, i64> = BTreeMap::new();
    for k in 1..=g.n() {
        let sol = backend.solve(&build_lp(g, k)?)?;
        for s in level_sets(&sol.y) {
            if let Entry::Vacant(e) = seen.entry(s) {
                let units = g.induced_units(e.key());
                e.insert(units);
            }
        }
    }
    let sets = seen.into_iter().map(|(s, u)| (u, s)).collect();
    Ok(Candidates {
        scale: g.scale(),
        sets,
    })
}

/// Exact optimum for monotone concave f: solve every LP_k and keep the best level set.
pub fn solve_concave_exact_lp(g: &Graph, f: &SizeFunction) -> Result<Solution> {
    f.check_admissible(g.n())?;
    a_coefficients(f, g.n())?;
    lp_candidates(g)?.best(f)
}

/// Dense frontier points of `g` ordered by size, starting at (0, 0).
pub fn dense_frontier(g: &Graph) -> Result<Vec<FrontierPoint>> {
    Ok(lp_candidates(g)?.frontier())
}

fn widen(x: Weight) -> Exact {
    Exact::new(i128::from(*x.numer()), i128::from(*x.denom()))
}

/// f(x) = slope (x - k) + w for x > 0, where (k, w) is `frontier[index]`.
///
/// Every f-densest subgraph under the returned f realizes the point. The
/// slope must lie strictly between the slopes of the adjacent hull edges
/// (zero to the right of the last point).
pub fn frontier_to_function(
    frontier: &[FrontierPoint],
    index: usize,
    slope: Ratio<i64>,
    n: usize,
) -> Result<SizeFunction> {
    let p = frontier
        .get(index)
        .ok_or_else(|| Error::InvalidParameter(format!("no frontier point {index}")))?;
    if p.size < 2 {
        return Err(Error::InvalidParameter(format!(
            "frontier point of size {} has no density",
            p.size
        )));
    }
    let edge_slope = |a: &FrontierPoint, b: &FrontierPoint| {
        (widen(b.weight) - widen(a.weight)) / Exact::from_integer((b.size - a.size) as i128)
    };
    let lam = widen(slope);
    let right = frontier
        .get(index + 1)
        .map_or(Exact::zero(), |q| edge_slope(p, q));
    let left = index.checked_sub(1).map(|i| edge_slope(&frontier[i], p));
    let inside = lam > right && left.is_none_or(|l| lam < l);
    if !inside {
        return Err(Error::InvalidParameter(format!(
            "slope {slope} does not single out the point ({}, {})",
            p.size, p.weight
        )));
    }
    let f = SizeFunction::new(
        Family::FrontierAffine {
            k: p.size,
            weight: p.weight,
            slope,
        },
        n,
    )?;
    f.check_admissible(n)?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    fn q(n: i128, d: i128) -> Exact {
        Exact::new(n, d)
    }

    fn one() -> Weight {
        Weight::from_integer(1)
    }

    #[test]
    fn single_edge_programs() {
        let g = fixtures::single_edge(one());
        let inst = build_lp(&g, 2).unwrap();
        assert_eq!((inst.variable_count(), inst.row_count()), (3, 3));
        let s = solve_lp(&inst).unwrap();
        assert_eq!(s.objective, q(1, 1));
        assert_eq!(s.y, alloc::vec![q(1, 1), q(1, 1)]);
        let s = solve_lp(&build_lp(&g, 1).unwrap()).unwrap();
        assert_eq!(s.objective, q(1, 2));
        assert_eq!(s.y, alloc::vec![q(1, 2), q(1, 2)]);
        assert_eq!(s.x, alloc::vec![q(1, 2)]);
        assert!(build_lp(&g, 0).is_err());
        assert!(build_lp(&g, 3).is_err());
    }

    #[test]
    fn triangle_lp1_spreads_evenly() {
        // y = (1/3, 1/3, 1/3) gives 1, the hull value at k = 1
        let s = solve_lp(&build_lp(&fixtures::complete(3), 1).unwrap()).unwrap();
        assert_eq!(s.objective, q(1, 1));
    }

    #[test]
    fn fig1_lp4_is_six() {
        let g = fixtures::fig1();
        assert_eq!(
            solve_lp(&build_lp(&g, 4).unwrap()).unwrap().objective,
            q(6, 1)
        );
        let full = solve_lp(&build_lp(&g, 8).unwrap()).unwrap();
        assert_eq!(full.objective, q(11, 1));
        assert!(full.y.iter().all(|y| *y == q(1, 1)));
    }

    #[test]
    fn sweep_tie_prefers_smaller_set() {
        let edges = alloc::vec![(0, 1, Weight::from_integer(2)), (1, 2, one())];
        let g = Graph::new(3, edges, None).unwrap();
        let f = SizeFunction::new(Family::Linear, 3).unwrap();
        let s = sweep_levels(&g, &f, &[q(1, 1), q(1, 1), q(1, 2)]).unwrap();
        assert_eq!(s.subset.members(), &[0, 1]);
        assert_eq!(s.exact_density, Some(q(1, 1)));
    }

    #[test]
    fn sweep_integral_and_empty_cases() {
        let g = fixtures::fig1();
        let f = SizeFunction::new(Family::Linear, 8).unwrap();
        let mut y = alloc::vec![q(0, 1); 8];
        y[..4].fill(q(1, 1));
        assert_eq!(
            sweep_levels(&g, &f, &y).unwrap().subset.members(),
            &[0, 1, 2, 3]
        );
        let y: Vec<Exact> = (0..8).map(|v| q(8 - v, 8)).collect();
        assert_eq!(level_sets(&y).len(), 8);
        let mut y = alloc::vec![q(0, 1); 8];
        y[0] = q(1, 1);
        assert_eq!(level_sets(&y).len(), 2);
        assert!(sweep_levels(&g, &f, &y[..3]).is_err());
    }

    #[test]
    fn fig1_exact_lp_solutions() {
        let g = fixtures::fig1();
        let s = solve_concave_exact_lp(&g, &SizeFunction::new(Family::Linear, 8).unwrap()).unwrap();
        assert_eq!(s.subset.members(), &[0, 1, 2, 3]);
        assert_eq!(s.exact_density, Some(q(3, 2)));
        let s = solve_concave_exact_lp(&g, &SizeFunction::sqrt(8)).unwrap();
        assert_eq!(s.size(), 8);
    }

    #[test]
    fn frontiers() {
        let pts = |g: &Graph| -> Vec<(usize, Weight)> {
            dense_frontier(g)
                .unwrap()
                .iter()
                .map(|p| (p.size, p.weight))
                .collect()
        };
        let w = |x: i64| Weight::from_integer(x);
        let fr = dense_frontier(&fixtures::fig1()).unwrap();
        let got: Vec<_> = fr.iter().map(|p| (p.size, p.weight)).collect();
        assert_eq!(
            got,
            alloc::vec![(0, w(0)), (4, w(6)), (7, w(10)), (8, w(11))]
        );
        assert_eq!(fr[1].witness.members(), &[0, 1, 2, 3]);
        assert_eq!(fr[2].witness.members(), &[0, 1, 2, 3, 4, 5, 6]);
        assert_eq!(
            pts(&fixtures::single_edge(one())),
            alloc::vec![(0, w(0)), (2, w(1))]
        );
        assert_eq!(
            pts(&fixtures::complete(4)),
            alloc::vec![(0, w(0)), (4, w(6))]
        );
    }

    #[test]
    fn frontier_functions() {
        let g = fixtures::fig1();
        let fr = dense_frontier(&g).unwrap();
        let f = frontier_to_function(&fr, 1, Ratio::new(7, 5), 8).unwrap();
        let s = solve_concave_exact_lp(&g, &f).unwrap();
        assert_eq!((s.size(), s.weight), (4, Weight::from_integer(6)));
        let f = frontier_to_function(&fr, 3, Ratio::new(1, 2), 8).unwrap();
        assert_eq!(solve_concave_exact_lp(&g, &f).unwrap().size(), 8);
        assert!(frontier_to_function(&fr, 1, Ratio::new(3, 2), 8).is_err());
        assert!(frontier_to_function(&fr, 0, Ratio::new(1, 1), 8).is_err());
        assert!(frontier_to_function(&fr, 3, Ratio::new(0, 1), 8).is_err());

        let tri = fixtures::complete(3);
        let f = SizeFunction::new(
            Family::FrontierAffine {
                k: 3,
                weight: Weight::from_integer(3),
                slope: Ratio::new(9, 10),
            },
            3,
        )
        .unwrap();
        assert_eq!(solve_concave_exact_lp(&tri, &f).unwrap().size(), 3);
    }
}
