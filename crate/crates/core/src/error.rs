use alloc::string::String;

use thiserror::Error;

/// Errors raised by graph construction, size-function validation and the solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} -- {1}")]
    DuplicateEdge(String, String),
    #[error("edge weight must be positive, got {0}")]
    NonPositiveWeight(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} is not a member of the subset")]
    NotMember(usize),
    #[error("edge weights overflow 64-bit rational arithmetic")]
    WeightOverflow,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("size function table covers 0..={have}, need 0..={need}")]
    TableTooShort { have: usize, need: usize },
    #[error("size function must satisfy f(0) = 0")]
    NonZeroAtOrigin,
    #[error("size function decreases at x = {0}")]
    NotMonotone(usize),
    #[error("size function must be positive at 2")]
    NotPositive,
    #[error("size function is not concave at x = {0}")]
    NotConcave(usize),
    #[error("size function is not convex at x = {0}")]
    NotConvex(usize),
    #[error("graph is not unweighted; use the (1+eps) weighted solver")]
    Weighted,
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("no candidate subset of size >= 2")]
    NoCandidate,
}

pub type Result<T> = core::result::Result<T, Error>;
