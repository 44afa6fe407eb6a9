use thiserror::Error;

/// Errors produced by graph construction, solving, decomposition and sweeps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },

    #[error("unsupported graph size: {0} vertices")]
    UnsupportedSize(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("state space of {states} positions exceeds the budget of {budget}")]
    ResourceExceeded { states: u128, budget: u128 },

    #[error("no k <= {k_max} cops win on this graph")]
    BoundExceeded { k_max: usize },

    #[error("state is a robber win; cops have no winning move")]
    NoWinningMove,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("structural check failed: {0}")]
    ClaimViolated(String),

    #[error("graph is outside the required class: {0}")]
    Class(String),

    #[error("illegal cop move from {from:?} to {to:?}")]
    IllegalMove { from: Vec<usize>, to: Vec<usize> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
