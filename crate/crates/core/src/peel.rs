//! Greedy peeling: repeatedly delete a vertex of minimum weighted degree and
//! score every intermediate vertex set.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::error::Result;
use crate::graph::{Graph, VertexSet, Weight};
use crate::size_fn::SizeFunction;
use crate::solution::{compare_density, Solution, Solver};

/// Elimination sequence produced by [`peel`].
///
/// `order()[0]` is the first vertex removed (v_n); the last entry is v_1.
/// S_i is the set of the last `i` vertices of the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelOrder {
    order: Vec<usize>,
    removal_units: Vec<i64>,
    suffix_units: Vec<i64>,
    scale: i64,
}

impl PeelOrder {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// w(S_i) for `i` in `0..=n`.
    pub fn suffix_weight(&self, i: usize) -> Weight {
        Weight::new(self.suffix_units[i], self.scale)
    }

    /// d_{S_i}(v_i) where v_i is the vertex removed from S_i.
    pub fn removal_degree(&self, i: usize) -> Weight {
        Weight::new(self.removal_units[self.n() - i], self.scale)
    }

    /// The vertex removed from S_i.
    pub fn removed_at(&self, i: usize) -> usize {
        self.order[self.n() - i]
    }

    pub fn suffix(&self, i: usize) -> VertexSet {
        VertexSet::new(self.order[self.n() - i..].to_vec())
    }
}

/// Runs greedy peeling in O(m log n) with a lazy-deletion heap.
/// Ties between minimum-degree vertices go to the smallest id.
pub fn peel(g: &Graph) -> PeelOrder {
    let n = g.n();
    let mut degree: Vec<i64> = (0..n).map(|v| g.degree_units(v)).collect();
    let mut removed = vec![false; n];
    let mut heap: BinaryHeap<Reverse<(i64, u32)>> = degree
        .iter()
        .enumerate()
        .map(|(v, &d)| Reverse((d, v as u32)))
        .collect();

    let mut order = Vec::with_capacity(n);
    let mut removal_units = Vec::with_capacity(n);
    let mut suffix_units = vec![0i64; n + 1];
    let mut remaining = g.total_units();
    suffix_units[n] = remaining;

    while let Some(Reverse((d, v))) = heap.pop() {
        let v = v as usize;
        if removed[v] || d != degree[v] {
            continue;
        }
        removed[v] = true;
        order.push(v);
        removal_units.push(d);
        remaining -= d;
        suffix_units[n - order.len()] = remaining;
        for (u, w) in g.neighbors_units(v) {
            if !removed[u] {
                degree[u] -= w;
                heap.push(Reverse((degree[u], u as u32)));
            }
        }
    }
    debug_assert_eq!(remaining, 0);
    PeelOrder {
        order,
        removal_units,
        suffix_units,
        scale: g.scale(),
    }
}

/// The suffix S_i maximizing w(S_i)/f(i); ties go to the smallest i.
/// Size-1 suffixes are scored only when f(1) > 0.
pub fn best_suffix(p: &PeelOrder, f: &SizeFunction) -> Result<Solution> {
    let n = p.n();
    f.check_admissible(n)?;
    let first = if f.value(1) > 0.0 { 1 } else { 2 };
    let mut best: Option<usize> = None;
    for i in first..=n {
        let better = match best {
            None => true,
            Some(b) => {
                compare_density(p.scale, f, (p.suffix_units[i], i), (p.suffix_units[b], b))
                    == Ordering::Greater
            }
        };
        if better {
            best = Some(i);
        }
    }
    let i = best.unwrap_or(n);
    Ok(Solution::from_units(
        p.scale,
        f,
        p.suffix(i),
        p.suffix_units[i],
        Solver::Peel,
    ))
}
