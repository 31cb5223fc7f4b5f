use thiserror::Error;

/// Failure modes shared by every operation in the crate.
///
/// `Violation` is reserved for situations that the underlying theory rules
/// out; seeing one means an upstream result (a barrier, a deficiency set)
/// was not what it claimed to be.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("edge {0} does not exist")]
    InvalidEdge(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("violation: {0}")]
    Violation(String),

    #[error("exhaustive search on {n} vertices exceeds the guard of {guard}")]
    Capacity { n: usize, guard: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}

pub(crate) fn violation(msg: impl Into<String>) -> Error {
    Error::Violation(msg.into())
}
