//! Solvers for the f-densest subgraph problem: given an edge-weighted
//! undirected graph and a monotone size function f with f(0) = 0, find a
//! vertex subset S maximizing w(S) / f(|S|).
//!
//! * convex f: [`convex::solve_convex`], an approximation combining
//!   brute force over small subsets with greedy peeling;
//! * concave f: exact solvers via min cuts ([`flow::solve_unweighted_exact`])
//!   and linear programming ([`lp::solve_concave_exact_lp`]), a (1+eps)
//!   min-cut search for weighted graphs ([`flow::solve_weighted_approx`]) and
//!   the 3-approximate [`peel::best_suffix`];
//! * [`lp::dense_frontier`]: extreme points of the upper hull of
//!   {(|S|, w(S))} with witnesses;
//! * [`oracle`]: exhaustive ground truth for n <= 24.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod convex;
pub mod error;
pub mod flow;
pub mod generate;
pub mod graph;
mod hull;
pub mod lp;
pub mod oracle;
pub mod peel;
pub mod simplex;
pub mod size_fn;
pub mod solution;

pub use error::{Error, Result};
pub use graph::{Exact, Graph, VertexSet, Weight};
pub use hull::FrontierPoint;
pub use size_fn::{Family, Shape, SizeFunction};
pub use solution::{Certificate, Corollary, Solution, Solver};
