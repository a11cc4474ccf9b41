use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("size mismatch: expected {expected} vertices, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid color value {0}, expected -1 or +1")]
    InvalidColor(i64),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// No word can realize the request, e.g. an isolated vertex would have to change color.
    #[error("unsatisfiable: {0}")]
    Unsatisfiable(String),

    #[error("state space too large: n = {n} exceeds the cap of {cap}")]
    ResourceLimit { n: usize, cap: usize },

    #[error("certified length {length} exceeds bound {bound} ({context})")]
    BoundExceeded {
        length: usize,
        bound: usize,
        context: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
