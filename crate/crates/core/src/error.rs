use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge weight must be positive")]
    NonPositiveWeight,
    #[error("weight overflow")]
    Overflow,
    #[error("invalid argument: {0}")]
    Domain(String),
    #[error("alpha must be at least 1")]
    AlphaBelowOne,
    #[error("invalid rational {0:?}")]
    InvalidRatio(String),
    #[error("terminal pair scan needs {required} pairs, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("brute force refused for n = {0} (limit {limit})", limit = crate::enumerate::BRUTE_FORCE_MAX_N)]
    TooLargeForBruteForce(usize),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
