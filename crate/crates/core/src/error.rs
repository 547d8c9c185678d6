use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what}: size {size} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("search budget of {limit} node expansions exhausted during {query}")]
    ResourceExhausted { limit: u64, query: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("no C>={r}-saturated graph on {n} vertices with at most {max_edges} edges")]
    NoSaturatedGraph { n: usize, r: usize, max_edges: usize },

    #[error("path route and cycle route disagree on non-edge ({u},{v}) for r={r}")]
    CrossCheckMismatch { u: usize, v: usize, r: usize },
}
