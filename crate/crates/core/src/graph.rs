//! Immutable edge-weighted undirected graphs and subset statistics.
//!
//! Edge weights are positive rationals. Internally every weight is stored as
//! an `i64` multiple of a common unit `1/scale`, where `scale` is the lcm of
//! all input denominators, so subset weights are plain integer sums.

use alloc::borrow::Cow;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedMul, Signed};

use crate::error::{Error, Result};

/// Positive rational edge weight, always reduced.
pub type Weight = Ratio<i64>;

/// Wide rational used where products of weights and size-function values meet.
pub type Exact = Ratio<i128>;

/// Sorted, duplicate-free list of dense vertex ids.
///
/// The derived ordering is lexicographic on the sorted member lists, which is
/// the tie-break used by every solver.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds the set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub(crate) fn check(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange(v)),
            _ => Ok(()),
        }
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(members: Vec<usize>) -> Self {
        VertexSet::new(members)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    /// Weight in units of `1/scale`.
    pub(crate) units: i64,
}

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    scale: i64,
    total_units: i64,
    offsets: Vec<usize>,
    adj_vertex: Vec<u32>,
    adj_units: Vec<i64>,
    labels: Option<Vec<String>>,
    unweighted: bool,
}

impl Graph {
    /// Builds a graph on vertices `0..n`.
    ///
    /// `labels`, when given, must hold one external name per vertex; otherwise
    /// vertices are labelled by their decimal id.
    pub fn new(
        n: usize,
        edges: Vec<(usize, usize, Weight)>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::InvalidParameter(format!(
                    "{} labels for {} vertices",
                    l.len(),
                    n
                )));
            }
        }
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let name = |v: usize| match &labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };

        let mut scale: i64 = 1;
        for &(u, v, w) in &edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u.max(v)));
            }
            if u == v {
                return Err(Error::SelfLoop(name(u)));
            }
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight(w.to_string()));
            }
            scale = scale.lcm(w.denom());
            if scale <= 0 {
                return Err(Error::WeightOverflow);
            }
        }

        let mut keyed: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v, _)| (u.min(v), u.max(v)))
            .collect();
        keyed.sort_unstable();
        if let Some(pair) = keyed.windows(2).find(|p| p[0] == p[1]) {
            let (a, b) = pair[0];
            return Err(Error::DuplicateEdge(name(a), name(b)));
        }
        drop(keyed);

        let mut total: i64 = 0;
        let mut list = Vec::with_capacity(edges.len());
        for (u, v, w) in edges {
            let units = w
                .numer()
                .checked_mul(&(scale / w.denom()))
                .ok_or(Error::WeightOverflow)?;
            total = total.checked_add(units).ok_or(Error::WeightOverflow)?;
            list.push(Edge { u, v, units });
        }

        let mut offsets = vec![0usize; n + 1];
        for e in &list {
            offsets[e.u + 1] += 1;
            offsets[e.v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut adj_vertex = vec![0u32; 2 * list.len()];
        let mut adj_units = vec![0i64; 2 * list.len()];
        for e in &list {
            adj_vertex[cursor[e.u]] = e.v as u32;
            adj_units[cursor[e.u]] = e.units;
            cursor[e.u] += 1;
            adj_vertex[cursor[e.v]] = e.u as u32;
            adj_units[cursor[e.v]] = e.units;
            cursor[e.v] += 1;
        }

        let unweighted = scale == 1 && list.iter().all(|e| e.units == 1);
        Ok(Graph {
            n,
            edges: list,
            scale,
            total_units: total,
            offsets,
            adj_vertex,
            adj_units,
            labels,
            unweighted,
        })
    }

    /// Builds a graph from labelled edges, assigning dense ids in order of
    /// first appearance.
    pub fn from_labeled_edges<S: AsRef<str>>(edges: &[(S, S, Weight)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        let mut index = alloc::collections::BTreeMap::new();
        let mut id_of = |s: &str, names: &mut Vec<String>| -> usize {
            *index.entry(s.to_string()).or_insert_with(|| {
                names.push(s.to_string());
                names.len() - 1
            })
        };
        let mut dense = Vec::with_capacity(edges.len());
        for (a, b, w) in edges {
            let u = id_of(a.as_ref(), &mut names);
            let v = id_of(b.as_ref(), &mut names);
            dense.push((u, v, *w));
        }
        Graph::new(names.len(), dense, Some(names))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Common denominator of all edge weights.
    pub fn scale(&self) -> i64 {
        self.scale
    }

    /// True when every edge has weight exactly 1.
    pub fn is_unweighted(&self) -> bool {
        self.unweighted
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (usize, usize, Weight)> + '_ {
        self.edges
            .iter()
            .map(move |e| (e.u, e.v, Weight::new(e.units, self.scale)))
    }

    pub fn label(&self, v: usize) -> Cow<'_, str> {
        match &self.labels {
            Some(l) => Cow::Borrowed(l[v].as_str()),
            None => Cow::Owned(v.to_string()),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `(neighbor, weight units)` pairs incident to `v`.
    pub(crate) fn neighbors_units(&self, v: usize) -> impl Iterator<Item = (usize, i64)> + '_ {
        let range = self.offsets[v]..self.offsets[v + 1];
        self.adj_vertex[range.clone()]
            .iter()
            .zip(&self.adj_units[range])
            .map(|(&u, &w)| (u as usize, w))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Weight)> + '_ {
        self.neighbors_units(v)
            .map(move |(u, w)| (u, Weight::new(w, self.scale)))
    }

    pub fn adjacency_len(&self) -> usize {
        self.adj_vertex.len()
    }

    pub(crate) fn to_weight(&self, units: i64) -> Weight {
        Weight::new(units, self.scale)
    }

    pub(crate) fn total_units(&self) -> i64 {
        self.total_units
    }

    /// w(V), the sum of all edge weights.
    pub fn total_weight(&self) -> Weight {
        self.to_weight(self.total_units)
    }

    pub(crate) fn degree_units(&self, v: usize) -> i64 {
        self.adj_units[self.offsets[v]..self.offsets[v + 1]]
            .iter()
            .sum()
    }

    /// Global weighted degree d(v).
    pub fn degree(&self, v: usize) -> Weight {
        self.to_weight(self.degree_units(v))
    }

    pub(crate) fn membership(&self, s: &VertexSet) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        for &v in s.members() {
            inside[v] = true;
        }
        inside
    }

    pub(crate) fn induced_units(&self, s: &VertexSet) -> i64 {
        if s.len() == self.n {
            return self.total_units;
        }
        let inside = self.membership(s);
        let mut sum = 0;
        for &v in s.members() {
            for (u, w) in self.neighbors_units(v) {
                if u > v && inside[u] {
                    sum += w;
                }
            }
        }
        sum
    }

    /// w(S): the total weight of edges with both endpoints in `s`.
    pub fn induced_weight(&self, s: &VertexSet) -> Result<Weight> {
        s.check(self.n)?;
        Ok(self.to_weight(self.induced_units(s)))
    }

    /// d_S(v): weighted degree of `v` inside the induced subgraph G[S].
    pub fn weighted_degree_in(&self, s: &VertexSet, v: usize) -> Result<Weight> {
        s.check(self.n)?;
        if !s.contains(v) {
            return Err(Error::NotMember(v));
        }
        let units = self
            .neighbors_units(v)
            .filter(|&(u, _)| s.contains(u))
            .map(|(_, w)| w)
            .sum();
        Ok(self.to_weight(units))
    }

    /// Heaviest edge, ties broken by the lexicographically smallest sorted pair.
    pub fn heaviest_edge(&self) -> (VertexSet, Weight) {
        let best = self
            .edges
            .iter()
            .map(|e| (e.units, e.u.min(e.v), e.u.max(e.v)))
            .min_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))))
            .expect("graph has at least one edge");
        (VertexSet(vec![best.1, best.2]), self.to_weight(best.0))
    }

    /// Sum of weight units inside the subset encoded by `mask` (n <= 64).
    #[cfg(test)]
    pub(crate) fn mask_units(&self, mask: u64) -> i64 {
        let mut sum = 0;
        for e in &self.edges {
            if mask >> e.u & 1 == 1 && mask >> e.v & 1 == 1 {
                sum += e.units;
            }
        }
        sum
    }
}

/// Canonical test fixtures.
pub mod fixtures {
    use super::*;

    /// The eight-vertex graph whose dense frontier is (0,0), (4,6), (7,10), (8,11):
    /// a K4 on {1,2,3,4}, a 4-cycle 4-5-6-7 and a pendant edge 7-8.
    pub fn fig1() -> Graph {
        let pairs = [
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (7, 8),
        ];
        let edges: Vec<(String, String, Weight)> = pairs
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string(), Weight::from_integer(1)))
            .collect();
        Graph::from_labeled_edges(&edges).expect("fixture is valid")
    }

    /// Unweighted complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, Weight::from_integer(1)));
            }
        }
        Graph::new(n, edges, None).expect("n >= 2")
    }

    /// Unweighted path 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Graph {
        let edges = (1..n)
            .map(|v| (v - 1, v, Weight::from_integer(1)))
            .collect();
        Graph::new(n, edges, None).expect("n >= 2")
    }

    /// Star with `leaves` unit spokes; the hub is the last vertex.
    pub fn star(leaves: usize) -> Graph {
        let edges = (0..leaves)
            .map(|v| (v, leaves, Weight::from_integer(1)))
            .collect();
        Graph::new(leaves + 1, edges, None).expect("leaves >= 1")
    }

    pub fn single_edge(w: Weight) -> Graph {
        Graph::new(2, vec![(0, 1, w)], None).expect("positive weight")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: i64, d: i64) -> Weight {
        Weight::new(n, d)
    }

    #[test]
    fn fig1_basic_counts() {
        let g = fixtures::fig1();
        assert_eq!(g.n(), 8);
        assert_eq!(g.m(), 11);
        assert!(g.is_unweighted());
        assert_eq!(g.label(0), "1");
        assert_eq!(g.label(7), "8");
    }

    #[test]
    fn induced_weight_examples() {
        let g = fixtures::fig1();
        let k4 = VertexSet::new(vec![0, 1, 2, 3]);
        assert_eq!(g.induced_weight(&k4).unwrap(), w(6, 1));
        assert_eq!(g.induced_weight(&VertexSet::empty()).unwrap(), w(0, 1));
        assert_eq!(g.induced_weight(&VertexSet::full(8)).unwrap(), w(11, 1));
        assert_eq!(g.total_weight(), w(11, 1));
    }

    #[test]
    fn weighted_degree_examples() {
        let g = fixtures::fig1();
        let all = VertexSet::full(8);
        // vertex "4" is id 3; its incident edges are 1-4, 2-4, 3-4, 4-5, 7-4
        assert_eq!(g.weighted_degree_in(&all, 3).unwrap(), w(5, 1));
        assert_eq!(g.weighted_degree_in(&all, 7).unwrap(), w(1, 1));
        let e = fixtures::single_edge(w(5, 2));
        assert_eq!(
            e.weighted_degree_in(&VertexSet::full(2), 0).unwrap(),
            w(5, 2)
        );
        assert_eq!(
            g.weighted_degree_in(&VertexSet::new(vec![0, 1]), 5),
            Err(Error::NotMember(5))
        );
    }

    #[test]
    fn degree_matches_global_for_full_set() {
        let g = fixtures::fig1();
        let all = VertexSet::full(8);
        for v in 0..8 {
            assert_eq!(g.degree(v), g.weighted_degree_in(&all, v).unwrap());
        }
    }

    #[test]
    fn rejects_bad_edges() {
        let one = Weight::from_integer(1);
        assert!(matches!(
            Graph::new(2, vec![(0, 0, one)], None),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 1, one), (1, 0, one)], None),
            Err(Error::DuplicateEdge(_, _))
        ));
        assert!(matches!(
            Graph::new(2, vec![(0, 1, Weight::from_integer(0))], None),
            Err(Error::NonPositiveWeight(_))
        ));
        assert_eq!(Graph::new(3, vec![], None).unwrap_err(), Error::NoEdges);
    }

    #[test]
    fn mixed_denominators_share_a_scale() {
        let g = Graph::new(3, vec![(0, 1, w(5, 2)), (1, 2, w(1, 3))], None).unwrap();
        assert_eq!(g.scale(), 6);
        assert_eq!(g.total_weight(), w(17, 6));
        assert!(!g.is_unweighted());
        let weights: Vec<Weight> = g.edges().map(|e| e.2).collect();
        assert_eq!(weights, vec![w(5, 2), w(1, 3)]);
    }

    #[test]
    fn overflowing_weights_are_rejected() {
        let big = Weight::from_integer(i64::MAX / 2 + 1);
        let g = Graph::new(3, vec![(0, 1, big), (1, 2, big)], None);
        assert_eq!(g.unwrap_err(), Error::WeightOverflow);
    }

    #[test]
    fn heaviest_edge_tie_is_lexicographic() {
        let g = fixtures::fig1();
        let (e, weight) = g.heaviest_edge();
        assert_eq!(e.members(), &[0, 1]);
        assert_eq!(weight, w(1, 1));
    }

    #[test]
    fn isolated_vertices_allowed() {
        let g = Graph::new(4, vec![(0, 1, w(1, 1))], None).unwrap();
        assert_eq!(g.degree(3), w(0, 1));
    }
}
