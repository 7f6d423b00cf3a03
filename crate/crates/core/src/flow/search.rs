//! Binary searches over the density threshold beta.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::network::{build_network, pinned_min_cost, threshold_test, NetworkValue};
use crate::error::{Error, Result};
use crate::graph::{Exact, Graph, VertexSet};
use crate::size_fn::{a_coefficients, SizeFunction};
use crate::solution::{compare_density, Solution, Solver};

/// One threshold test of a search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub beta: f64,
    /// Minimum cut cost at `beta`.
    pub cost: f64,
    pub achievable: bool,
    pub witness_size: usize,
}

/// Exact optimum on an unweighted graph for monotone concave f.
pub fn solve_unweighted_exact(g: &Graph, f: &SizeFunction) -> Result<Solution> {
    Ok(solve_unweighted_exact_traced(g, f)?.0)
}

/// Binary search over the sorted candidate values p / f(q), p <= m, 2 <= q <= n.
///
/// The optimum is one of the candidates, so the largest achievable candidate
/// is the optimum and its witness is an optimal set. Rational f is searched
/// in exact arithmetic; other f use `f64` with candidates merged within the
/// tolerance of f.
pub fn solve_unweighted_exact_traced(
    g: &Graph,
    f: &SizeFunction,
) -> Result<(Solution, Vec<Probe>)> {
    if !g.is_unweighted() {
        return Err(Error::Weighted);
    }
    let n = g.n();
    f.check_admissible(n)?;
    a_coefficients(f, n)?;
    if let Some(grid) = exact_grid(g, f) {
        match grid_search(g, f, &grid, 0.0) {
            Err(Error::WeightOverflow) => {}
            other => return other,
        }
    }
    grid_search(g, f, &float_grid(g, f), 1e-12)
}

/// Edge counts that a q-vertex simple graph can carry, per q.
fn max_edges(g: &Graph, q: usize) -> usize {
    g.m().min(q * (q - 1) / 2)
}

fn exact_grid(g: &Graph, f: &SizeFunction) -> Option<Vec<Exact>> {
    let mut grid = alloc::vec![Exact::from_integer(0)];
    for q in 2..=g.n() {
        let fq = f.exact(q)?;
        for p in 1..=max_edges(g, q) {
            grid.push(Exact::from_integer(p as i128) / fq);
        }
    }
    grid.sort_unstable();
    grid.dedup();
    Some(grid)
}

fn float_grid(g: &Graph, f: &SizeFunction) -> Vec<f64> {
    let mut raw = alloc::vec![0.0];
    for q in 2..=g.n() {
        let fq = f.value(q);
        raw.extend((1..=max_edges(g, q)).map(|p| p as f64 / fq));
    }
    raw.sort_unstable_by(f64::total_cmp);
    let mut grid: Vec<f64> = Vec::with_capacity(raw.len());
    for x in raw {
        match grid.last() {
            Some(&last) if x <= last * (1.0 + f.tol()) => {}
            _ => grid.push(x),
        }
    }
    grid
}

fn grid_search<C: NetworkValue>(
    g: &Graph,
    f: &SizeFunction,
    grid: &[C],
    slack: f64,
) -> Result<(Solution, Vec<Probe>)> {
    // grid[lo] is achievable, grid[hi] is not (hi == len stands for +inf)
    let (mut lo, mut hi) = (0, grid.len());
    let mut witness = None;
    let mut probes = Vec::new();
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        let t = threshold_test(g, f, grid[mid])?;
        probes.push(Probe {
            beta: grid[mid].to_f64(),
            cost: t.cost.to_f64(),
            achievable: t.achievable,
            witness_size: t.witness.len(),
        });
        if t.achievable {
            lo = mid;
            witness = Some(t.witness);
        } else {
            hi = mid;
        }
    }
    let witness = match witness {
        Some(w) => w,
        None => threshold_test(g, f, grid[lo])?.witness,
    };
    let subset = lex_smallest_optimum(g, f, grid[lo], &witness, slack)?;
    let units = g.induced_units(&subset);
    Ok((
        Solution::from_units(g.scale(), f, subset, units, Solver::FlowExact),
        probes,
    ))
}

/// Lexicographically smallest S with beta f(|S|) - w(S) <= 0, where beta is
/// the optimum: decide vertices in id order, keeping v whenever some optimal
/// set agrees with the decisions so far and contains v. `slack` widens the
/// test relative to w(V) for `f64` networks.
fn lex_smallest_optimum<C: NetworkValue>(
    g: &Graph,
    f: &SizeFunction,
    beta: C,
    witness: &VertexSet,
    slack: f64,
) -> Result<VertexSet> {
    let net = build_network(g, f, beta)?;
    let total = C::from_units(g.total_units(), g.scale());
    let bound = total.to_f64() * (1.0 + slack);
    let fits = |cost: C| {
        if slack == 0.0 {
            cost <= total
        } else {
            cost.to_f64() <= bound
        }
    };
    let mut inside = Vec::new();
    let mut outside = Vec::new();
    for v in 0..g.n() {
        if !inside.is_empty()
            && fits(net.cut_cost(&net.forced_cut(&VertexSet::new(inside.clone()))))
        {
            break;
        }
        inside.push(v);
        if !fits(pinned_min_cost(&net, &inside, &outside)?) {
            inside.pop();
            outside.push(v);
        }
    }
    let pick = VertexSet::new(inside);
    let keep = !pick.is_empty()
        && compare_density(
            g.scale(),
            f,
            (g.induced_units(&pick), pick.len()),
            (g.induced_units(witness), witness.len()),
        ) != Ordering::Less;
    Ok(if keep { pick } else { witness.clone() })
}

/// Result of the (1+eps) search with its trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Approx {
    pub solution: Solution,
    pub probes: Vec<Probe>,
    /// Final bracket: the optimum lies in [lower, upper).
    pub lower: f64,
    pub upper: f64,
}

impl Approx {
    pub fn iterations(&self) -> usize {
        self.probes.len()
    }
}

/// (1+eps)-approximation for weighted graphs and monotone concave f.
pub fn solve_weighted_approx(g: &Graph, f: &SizeFunction, epsilon: f64) -> Result<Solution> {
    Ok(solve_weighted_approx_traced(g, f, epsilon)?.solution)
}

/// Geometric binary search between w(e*)/f(2) for the heaviest edge e* and
/// w(V)/f(2), probing sqrt(lower * upper) until upper < (1+eps) lower.
pub fn solve_weighted_approx_traced(g: &Graph, f: &SizeFunction, epsilon: f64) -> Result<Approx> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let n = g.n();
    f.check_admissible(n)?;
    a_coefficients(f, n)?;
    let scale = g.scale() as f64;
    let (edge, edge_weight) = g.heaviest_edge();
    let f2 = f.value(2);
    let mut lower = *edge_weight.numer() as f64 / *edge_weight.denom() as f64 / f2;
    let mut upper = g.total_units() as f64 / scale / f2;
    let mut best = edge;
    let mut probes = Vec::new();
    while upper >= (1.0 + epsilon) * lower {
        let beta = libm::sqrt(lower * upper);
        let t = threshold_test(g, f, beta)?;
        // accept only witnesses whose own density reaches beta
        let achievable = !t.witness.is_empty()
            && g.induced_units(&t.witness) as f64 / scale / f.value(t.witness.len()) >= beta;
        probes.push(Probe {
            beta,
            cost: t.cost,
            achievable,
            witness_size: t.witness.len(),
        });
        if achievable {
            lower = beta;
            best = t.witness;
        } else {
            upper = beta;
        }
    }
    let units = g.induced_units(&best);
    let solution = Solution::from_units(g.scale(), f, best, units, Solver::FlowApprox { epsilon });
    Ok(Approx {
        solution,
        probes,
        lower,
        upper,
    })
}
