//! Concave f via minimum cuts: the cut network, the threshold test and the
//! two binary searches over the density threshold.

mod maxflow;
mod network;
mod search;

pub use network::{
    build_network, min_cut, min_cut_side, threshold_test, ArcKind, CutResult, CutSide, FlowNetwork,
    NetArc, NetworkValue, Threshold, SINK, SOURCE,
};
pub use search::{
    solve_unweighted_exact, solve_unweighted_exact_traced, solve_weighted_approx,
    solve_weighted_approx_traced, Approx, Probe,
};
