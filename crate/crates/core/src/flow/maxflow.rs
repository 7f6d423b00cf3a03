//! Highest-label push-relabel maximum flow with the gap heuristic.
//!
//! The run continues past the maximum preflow until all excess has returned
//! to the source, so the result is a proper flow and both the minimal and the
//! maximal minimum cut can be read off the residual graph.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Sub, SubAssign};

/// Arithmetic needed by the flow engine.
pub trait Capacity:
    Copy + PartialOrd + Add<Output = Self> + Sub<Output = Self> + AddAssign + SubAssign
{
    const ZERO: Self;
}

impl Capacity for f64 {
    const ZERO: f64 = 0.0;
}

impl Capacity for i128 {
    const ZERO: i128 = 0;
}

fn min<C: Capacity>(a: C, b: C) -> C {
    if a < b {
        a
    } else {
        b
    }
}

pub(crate) struct Residual<C> {
    nodes: usize,
    first: Vec<usize>,
    to: Vec<u32>,
    rev: Vec<u32>,
    res: Vec<C>,
    /// Residual values at or below `eps` count as zero.
    eps: C,
}

impl<C: Capacity> Residual<C> {
    /// Builds the residual graph; arcs with capacity <= eps are skipped.
    pub(crate) fn new(
        nodes: usize,
        arcs: impl Iterator<Item = (usize, usize, C)> + Clone,
        eps: C,
    ) -> Self {
        let mut first = vec![0usize; nodes + 1];
        for (u, v, c) in arcs.clone() {
            if c > eps {
                first[u + 1] += 1;
                first[v + 1] += 1;
            }
        }
        for i in 0..nodes {
            first[i + 1] += first[i];
        }
        let total = first[nodes];
        let mut cursor = first.clone();
        let mut to = vec![0u32; total];
        let mut rev = vec![0u32; total];
        let mut res = vec![C::ZERO; total];
        for (u, v, c) in arcs {
            if c <= eps {
                continue;
            }
            let a = cursor[u];
            let b = cursor[v];
            cursor[u] += 1;
            cursor[v] += 1;
            to[a] = v as u32;
            to[b] = u as u32;
            rev[a] = b as u32;
            rev[b] = a as u32;
            res[a] = c;
        }
        Residual {
            nodes,
            first,
            to,
            rev,
            res,
            eps,
        }
    }

    /// Pushes a maximum flow from `s` to `t`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize) {
        let n = self.nodes;
        let eps = self.eps;
        let cap_height = 2 * n;
        let mut height = self.distances_to(t);
        for h in height.iter_mut() {
            if *h == usize::MAX {
                *h = n;
            }
        }
        height[s] = n;

        let mut excess = vec![C::ZERO; n];
        let mut count = vec![0usize; cap_height + 1];
        for &h in &height {
            count[h] += 1;
        }
        let mut buckets: Vec<Vec<u32>> = vec![Vec::new(); cap_height + 1];
        let mut in_bucket = vec![false; n];
        let mut top = 0usize;

        for a in self.first[s]..self.first[s + 1] {
            let c = self.res[a];
            if c > eps {
                let v = self.to[a] as usize;
                self.res[a] -= c;
                let r = self.rev[a] as usize;
                self.res[r] += c;
                excess[v] += c;
                if v != t && v != s && !in_bucket[v] {
                    in_bucket[v] = true;
                    buckets[height[v]].push(v as u32);
                    top = top.max(height[v]);
                }
            }
        }

        let mut current: Vec<usize> = self.first[..n].to_vec();
        loop {
            while top > 0 && buckets[top].is_empty() {
                top -= 1;
            }
            let Some(u) = buckets[top].pop() else {
                break;
            };
            let u = u as usize;
            in_bucket[u] = false;

            // discharge u
            while excess[u] > eps {
                if current[u] == self.first[u + 1] {
                    let old = height[u];
                    let mut best = usize::MAX;
                    for a in self.first[u]..self.first[u + 1] {
                        if self.res[a] > eps {
                            best = best.min(height[self.to[a] as usize]);
                        }
                    }
                    let new = if best == usize::MAX {
                        cap_height
                    } else {
                        (best + 1).min(cap_height)
                    };
                    count[old] -= 1;
                    height[u] = new;
                    count[new] += 1;
                    current[u] = self.first[u];
                    if old < n && count[old] == 0 {
                        for v in 0..n {
                            if height[v] > old && height[v] < n && v != s {
                                count[height[v]] -= 1;
                                height[v] = n + 1;
                                count[n + 1] += 1;
                                current[v] = self.first[v];
                                if in_bucket[v] {
                                    buckets[n + 1].push(v as u32);
                                }
                            }
                        }
                        for (b, bucket) in buckets.iter_mut().enumerate().take(n).skip(old + 1) {
                            bucket.retain(|&v| height[v as usize] == b);
                        }
                        top = top.max(n + 1);
                    }
                    if height[u] >= cap_height {
                        // isolated from both terminals within tolerance
                        excess[u] = C::ZERO;
                        break;
                    }
                    continue;
                }
                let a = current[u];
                let v = self.to[a] as usize;
                if self.res[a] > eps && height[u] == height[v] + 1 {
                    let delta = min(excess[u], self.res[a]);
                    self.res[a] -= delta;
                    let r = self.rev[a] as usize;
                    self.res[r] += delta;
                    excess[u] -= delta;
                    excess[v] += delta;
                    if v != s && v != t && !in_bucket[v] && excess[v] > eps {
                        in_bucket[v] = true;
                        buckets[height[v]].push(v as u32);
                        top = top.max(height[v]);
                    }
                    if self.res[a] <= eps {
                        current[u] += 1;
                    }
                } else {
                    current[u] += 1;
                }
            }
        }
    }

    /// BFS distances to `t` along residual arcs; `usize::MAX` when unreachable.
    fn distances_to(&self, t: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.nodes];
        dist[t] = 0;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for a in self.first[v]..self.first[v + 1] {
                let u = self.to[a] as usize;
                // arc u -> v is the reverse of a
                if dist[u] == usize::MAX && self.res[self.rev[a] as usize] > self.eps {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Nodes reachable from `s` in the residual graph.
    pub(crate) fn reachable_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for a in self.first[u]..self.first[u + 1] {
                let v = self.to[a] as usize;
                if !seen[v] && self.res[a] > self.eps {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Complement of the nodes that can reach `t` in the residual graph.
    pub(crate) fn not_reaching(&self, t: usize) -> Vec<bool> {
        self.distances_to(t)
            .into_iter()
            .map(|d| d == usize::MAX)
            .collect()
    }
}
