//! Upper convex hull of (size, weight) points.

use alloc::vec::Vec;

use crate::graph::{VertexSet, Weight};

/// Extreme point of the upper convex hull of {(|S|, w(S)) : S subset of V}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontierPoint {
    pub size: usize,
    pub weight: Weight,
    pub witness: VertexSet,
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Indices of the strict extreme points of the upper hull of `points`
/// (`(x, y)` sorted by strictly increasing x), keeping only points that are
/// unique maximizers of y - lambda x for some lambda > 0.
pub(crate) fn upper_hull(points: &[(usize, i64)]) -> Vec<usize> {
    let p = |i: usize| (points[i].0 as i128, points[i].1 as i128);
    let mut hull: Vec<usize> = Vec::new();
    for i in 0..points.len() {
        while hull.len() >= 2 && cross(p(hull[hull.len() - 2]), p(hull[hull.len() - 1]), p(i)) >= 0
        {
            hull.pop();
        }
        hull.push(i);
    }
    while hull.len() >= 2 && p(hull[hull.len() - 1]).1 <= p(hull[hull.len() - 2]).1 {
        hull.pop();
    }
    hull
}
