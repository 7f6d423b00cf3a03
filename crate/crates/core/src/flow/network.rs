//! The cut network whose minimum s-t cut encodes min over S of
//! beta f(|S|) - w(S), plus the threshold test built on it.
//!
//! Nodes: the source, the sink, one node per graph vertex and size nodes
//! p_1..p_n. Arcs: s -> v with d(v)/2; both directions of every edge with
//! w/2; v -> p_k with beta a_k for every vertex and k; p_k -> t with
//! beta k a_k. The a_k are the coefficients of [`a_coefficients`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;
use core::ops::{Add, Mul};

use num_integer::Integer;
use num_traits::{CheckedMul, Zero};

use super::maxflow::Residual;
use crate::error::{Error, Result};
use crate::graph::{Exact, Graph, VertexSet};
use crate::size_fn::{a_coefficients, ACoefficients, SizeFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    /// s -> v
    Source,
    /// p_k -> t
    Sink,
    /// u -> v for an edge {u, v}
    Edge,
    /// v -> p_k
    Size,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetArc<C> {
    pub from: usize,
    pub to: usize,
    pub cap: C,
    pub kind: ArcKind,
}

/// Which minimum cut to report when several exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutSide {
    /// Nodes reachable from s in the final residual graph.
    Minimal,
    /// Nodes that cannot reach t in the final residual graph.
    Maximal,
}

/// Capacity values the network can be built over: `f64` or exact rationals.
pub trait NetworkValue:
    Copy + Debug + PartialOrd + Zero + Add<Output = Self> + Mul<Output = Self>
{
    fn from_units(units: i64, scale: i64) -> Self;
    fn from_count(x: usize) -> Self;
    fn half() -> Self;
    fn coefficients(a: &ACoefficients) -> Option<Vec<Self>>;
    fn to_f64(self) -> f64;
    /// Source side of a minimum cut, one flag per node.
    fn cut_side(nodes: usize, arcs: &[NetArc<Self>], side: CutSide) -> Result<Vec<bool>>;
}

impl NetworkValue for f64 {
    fn from_units(units: i64, scale: i64) -> Self {
        units as f64 / scale as f64
    }

    fn from_count(x: usize) -> Self {
        x as f64
    }

    fn half() -> Self {
        0.5
    }

    fn coefficients(a: &ACoefficients) -> Option<Vec<Self>> {
        Some(a.a.clone())
    }

    fn to_f64(self) -> f64 {
        self
    }

    fn cut_side(nodes: usize, arcs: &[NetArc<f64>], side: CutSide) -> Result<Vec<bool>> {
        let max_cap = arcs.iter().map(|a| a.cap).fold(1.0, f64::max);
        let eps = 1e-12 * max_cap;
        let mut r = Residual::new(nodes, arcs.iter().map(|a| (a.from, a.to, a.cap)), eps);
        r.max_flow(0, 1);
        Ok(match side {
            CutSide::Minimal => r.reachable_from(0),
            CutSide::Maximal => r.not_reaching(1),
        })
    }
}

impl NetworkValue for Exact {
    fn from_units(units: i64, scale: i64) -> Self {
        Exact::new(i128::from(units), i128::from(scale))
    }

    fn from_count(x: usize) -> Self {
        Exact::from_integer(x as i128)
    }

    fn half() -> Self {
        Exact::new(1, 2)
    }

    fn coefficients(a: &ACoefficients) -> Option<Vec<Self>> {
        a.exact.clone()
    }

    fn to_f64(self) -> f64 {
        crate::size_fn::exact_to_f64(&self)
    }

    /// Scales every capacity to an integer by the lcm of the denominators and
    /// runs the flow in `i128`.
    fn cut_side(nodes: usize, arcs: &[NetArc<Exact>], side: CutSide) -> Result<Vec<bool>> {
        let mut lcm: i128 = 1;
        for a in arcs {
            lcm = lcm.lcm(a.cap.denom());
            if lcm <= 0 || lcm > i128::MAX >> 40 {
                return Err(Error::WeightOverflow);
            }
        }
        let mut scaled = Vec::with_capacity(arcs.len());
        let mut total: i128 = 0;
        for a in arcs {
            let c = a
                .cap
                .numer()
                .checked_mul(&(lcm / a.cap.denom()))
                .ok_or(Error::WeightOverflow)?;
            total = total.checked_add(c).ok_or(Error::WeightOverflow)?;
            scaled.push((a.from, a.to, c));
        }
        if total > i128::MAX >> 4 {
            return Err(Error::WeightOverflow);
        }
        let mut r = Residual::new(nodes, scaled.iter().copied(), 0i128);
        r.max_flow(0, 1);
        Ok(match side {
            CutSide::Minimal => r.reachable_from(0),
            CutSide::Maximal => r.not_reaching(1),
        })
    }
}

#[derive(Debug, Clone)]
pub struct FlowNetwork<C> {
    vertices: usize,
    beta: C,
    arcs: Vec<NetArc<C>>,
}

pub const SOURCE: usize = 0;
pub const SINK: usize = 1;

impl<C: NetworkValue> FlowNetwork<C> {
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn node_count(&self) -> usize {
        2 * self.vertices + 2
    }

    pub fn vertex_node(&self, v: usize) -> usize {
        2 + v
    }

    /// Node of p_k, k in 1..=n.
    pub fn size_node(&self, k: usize) -> usize {
        1 + self.vertices + k
    }

    pub fn beta(&self) -> C {
        self.beta
    }

    pub fn arcs(&self) -> &[NetArc<C>] {
        &self.arcs
    }

    pub fn count(&self, kind: ArcKind) -> usize {
        self.arcs.iter().filter(|a| a.kind == kind).count()
    }

    /// Total capacity of arcs leaving the node set flagged in `source_side`.
    pub fn cut_cost(&self, source_side: &[bool]) -> C {
        self.arcs
            .iter()
            .filter(|a| source_side[a.from] && !source_side[a.to])
            .fold(C::zero(), |acc, a| acc + a.cap)
    }

    /// The cut induced by choosing S: X = {s} + S + {p_k : k < |S|}.
    pub fn forced_cut(&self, s: &VertexSet) -> Vec<bool> {
        let mut side = vec![false; self.node_count()];
        side[SOURCE] = true;
        for &v in s.members() {
            side[self.vertex_node(v)] = true;
        }
        for k in 1..s.len() {
            side[self.size_node(k)] = true;
        }
        side
    }
}

/// Builds the network for threshold `beta`. Requires f monotone and concave on [0, n].
pub fn build_network<C: NetworkValue>(
    g: &Graph,
    f: &SizeFunction,
    beta: C,
) -> Result<FlowNetwork<C>> {
    let n = g.n();
    f.check_admissible(n)?;
    let coeffs = a_coefficients(f, n)?;
    let a = C::coefficients(&coeffs).ok_or_else(|| {
        Error::InvalidParameter("exact network needs a rational-valued size function".into())
    })?;
    if beta < C::zero() {
        return Err(Error::InvalidParameter("beta must be non-negative".into()));
    }
    let scale = g.scale();
    let half = C::half();
    let vertex = |v: usize| 2 + v;
    let size = |k: usize| 1 + n + k;

    let mut arcs = Vec::with_capacity(2 * n + 2 * g.m() + n * n);
    for v in 0..n {
        arcs.push(NetArc {
            from: SOURCE,
            to: vertex(v),
            cap: C::from_units(g.degree_units(v), scale) * half,
            kind: ArcKind::Source,
        });
    }
    for k in 1..=n {
        arcs.push(NetArc {
            from: size(k),
            to: SINK,
            cap: beta * C::from_count(k) * a[k - 1],
            kind: ArcKind::Sink,
        });
    }
    for v in 0..n {
        for (u, w) in g.neighbors_units(v) {
            arcs.push(NetArc {
                from: vertex(v),
                to: vertex(u),
                cap: C::from_units(w, scale) * half,
                kind: ArcKind::Edge,
            });
        }
    }
    for v in 0..n {
        for k in 1..=n {
            arcs.push(NetArc {
                from: vertex(v),
                to: size(k),
                cap: beta * a[k - 1],
                kind: ArcKind::Size,
            });
        }
    }
    Ok(FlowNetwork {
        vertices: n,
        beta,
        arcs,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CutResult<C> {
    /// Node ids on the source side, ascending.
    pub source_side: Vec<usize>,
    pub cost: C,
    /// Graph vertices on the source side.
    pub subset: VertexSet,
}

/// A minimum s-t cut whose source side is the residual reachability set of s.
pub fn min_cut<C: NetworkValue>(net: &FlowNetwork<C>) -> Result<CutResult<C>> {
    min_cut_side(net, CutSide::Minimal)
}

pub fn min_cut_side<C: NetworkValue>(net: &FlowNetwork<C>, side: CutSide) -> Result<CutResult<C>> {
    let flags = C::cut_side(net.node_count(), &net.arcs, side)?;
    let cost = net.cut_cost(&flags);
    let subset = VertexSet::new((0..net.vertices).filter(|&v| flags[2 + v]).collect());
    let source_side = (0..flags.len()).filter(|&i| flags[i]).collect();
    Ok(CutResult {
        source_side,
        cost,
        subset,
    })
}

/// Minimum cut cost when every vertex of `inside` is pinned to the source
/// side and every vertex of `outside` to the sink side.
pub(crate) fn pinned_min_cost<C: NetworkValue>(
    net: &FlowNetwork<C>,
    inside: &[usize],
    outside: &[usize],
) -> Result<C> {
    let big = net.arcs.iter().fold(C::from_count(1), |acc, a| acc + a.cap);
    let mut arcs = net.arcs.clone();
    for &v in inside {
        arcs.push(NetArc {
            from: SOURCE,
            to: 2 + v,
            cap: big,
            kind: ArcKind::Source,
        });
    }
    for &v in outside {
        arcs.push(NetArc {
            from: 2 + v,
            to: SINK,
            cap: big,
            kind: ArcKind::Sink,
        });
    }
    let flags = C::cut_side(net.node_count(), &arcs, CutSide::Minimal)?;
    Ok(net.cut_cost(&flags))
}

/// Outcome of deciding whether max w(S)/f(|S|) >= beta.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold<C> {
    pub achievable: bool,
    /// Graph part of the maximal minimum-cut source side.
    pub witness: VertexSet,
    pub cost: C,
}

/// Decides max_S w(S)/f(|S|) >= beta with one maximal minimum cut.
///
/// The empty set always costs exactly w(V); beta is achievable iff some
/// non-empty set ties or beats it, which puts that set on the maximal source side.
pub fn threshold_test<C: NetworkValue>(
    g: &Graph,
    f: &SizeFunction,
    beta: C,
) -> Result<Threshold<C>> {
    let net = build_network(g, f, beta)?;
    let cut = min_cut_side(&net, CutSide::Maximal)?;
    let achievable = !cut.subset.is_empty() && {
        let units = g.induced_units(&cut.subset);
        let d = units as f64 / g.scale() as f64 / f.value(cut.subset.len());
        // exact networks need no slack; the f64 check absorbs rounding only
        d >= beta.to_f64() * (1.0 - f.tol().max(1e-12))
    };
    Ok(Threshold {
        achievable,
        witness: cut.subset,
        cost: cut.cost,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{fixtures, Weight};
    use crate::size_fn::Family;

    fn linear(n: usize) -> SizeFunction {
        SizeFunction::new(Family::Linear, n).unwrap()
    }

    #[test]
    fn single_edge_capacities() {
        let g = fixtures::single_edge(Weight::from_integer(1));
        let net = build_network(&g, &linear(2), 0.6).unwrap();
        let cap = |from: usize, to: usize| {
            net.arcs()
                .iter()
                .find(|a| a.from == from && a.to == to)
                .unwrap()
                .cap
        };
        let (u, v) = (net.vertex_node(0), net.vertex_node(1));
        let (p1, p2) = (net.size_node(1), net.size_node(2));
        assert_eq!(cap(SOURCE, u), 0.5);
        assert_eq!(cap(SOURCE, v), 0.5);
        assert_eq!(cap(u, v), 0.5);
        assert_eq!(cap(v, u), 0.5);
        assert_eq!(cap(u, p2), 0.6);
        assert_eq!(cap(v, p2), 0.6);
        assert_eq!(cap(u, p1), 0.0);
        assert!((cap(p2, SINK) - 1.2).abs() < 1e-15);
        assert_eq!(cap(p1, SINK), 0.0);
    }

    #[test]
    fn zero_beta_zeroes_size_and_sink_arcs() {
        let g = fixtures::fig1();
        let net = build_network(&g, &SizeFunction::sqrt(8), 0.0).unwrap();
        assert!(net
            .arcs()
            .iter()
            .filter(|a| matches!(a.kind, ArcKind::Sink | ArcKind::Size))
            .all(|a| a.cap == 0.0));
    }

    #[test]
    fn fig1_counts() {
        let g = fixtures::fig1();
        let net = build_network(&g, &linear(8), 1.0).unwrap();
        assert_eq!(net.node_count(), 18);
        assert_eq!(net.count(ArcKind::Source), 8);
        assert_eq!(net.count(ArcKind::Sink), 8);
        assert_eq!(net.count(ArcKind::Edge), 22);
        assert_eq!(net.count(ArcKind::Size), 64);
    }

    #[test]
    fn single_edge_cuts() {
        let g = fixtures::single_edge(Weight::from_integer(1));
        let cut = min_cut(&build_network(&g, &linear(2), 0.6).unwrap()).unwrap();
        assert!((cut.cost - 1.0).abs() < 1e-12);
        assert!(cut.subset.is_empty());

        let cut = min_cut(&build_network(&g, &linear(2), 0.4).unwrap()).unwrap();
        assert!((cut.cost - 0.8).abs() < 1e-12);
        assert_eq!(cut.subset.members(), &[0, 1]);

        let cut = min_cut(&build_network(&g, &linear(2), 0.0).unwrap()).unwrap();
        assert_eq!(cut.cost, 0.0);
        assert_eq!(cut.subset.members(), &[0, 1]);
    }

    #[test]
    fn exact_network_single_edge() {
        let g = fixtures::single_edge(Weight::from_integer(1));
        let cut = min_cut(&build_network(&g, &linear(2), Exact::new(2, 5)).unwrap()).unwrap();
        assert_eq!(cut.cost, Exact::new(4, 5));
        assert_eq!(cut.subset.members(), &[0, 1]);
    }

    #[test]
    fn threshold_examples() {
        let tri = fixtures::complete(3);
        let t = threshold_test(&tri, &linear(3), 1.0).unwrap();
        assert!(t.achievable);
        assert_eq!(t.witness.members(), &[0, 1, 2]);
        let t = threshold_test(&tri, &linear(3), Exact::from_integer(1)).unwrap();
        assert!(t.achievable);
        assert_eq!(t.witness.len(), 3);
        assert!(!threshold_test(&tri, &linear(3), 1.01).unwrap().achievable);
        assert!(
            !threshold_test(&tri, &linear(3), Exact::new(101, 100))
                .unwrap()
                .achievable
        );

        let g = fixtures::fig1();
        let t = threshold_test(&g, &SizeFunction::sqrt(8), 3.8).unwrap();
        assert!(t.achievable);
        assert_eq!(t.witness.len(), 8);
    }

    #[test]
    fn forced_cut_cost_identity() {
        let g = fixtures::fig1();
        let f = SizeFunction::sqrt(8);
        let net = build_network(&g, &f, 1.3).unwrap();
        for s in [
            vec![],
            vec![0, 1],
            vec![0, 1, 2, 3],
            vec![3, 4, 5, 6],
            (0..8).collect(),
        ] {
            let s = VertexSet::new(s);
            let w = g.induced_units(&s) as f64;
            let want = 11.0 + 1.3 * f.value(s.len()) - w;
            assert!((net.cut_cost(&net.forced_cut(&s)) - want).abs() < 1e-9);
        }
    }

    #[test]
    fn rejects_convex_f() {
        let g = fixtures::fig1();
        let f = SizeFunction::new(Family::Power(2.0), 8).unwrap();
        assert!(matches!(
            build_network(&g, &f, 1.0),
            Err(Error::NotConcave(_))
        ));
    }
}
