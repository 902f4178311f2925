use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("loop at vertex {v} is not allowed")]
    LoopEdge { v: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    /// An exhaustive routine refused to run because the input exceeds its
    /// guard. The guards are overridable, the hard caps are not.
    #[error("{what}: size {actual} exceeds the guard of {limit}")]
    ResourceGuard {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
