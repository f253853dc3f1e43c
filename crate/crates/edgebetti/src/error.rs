//! Crate-wide error type.

/// Errors reported by this crate.
///
/// `Capacity` is deliberately separate from `InvalidInput`: the former means
/// the request is well-formed but outside the sizes this crate commits to
/// computing exactly, the latter means the request itself is malformed.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("regularity is undefined for an edgeless graph")]
    UndefinedRegularity,

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invariant violation: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI: usage errors are 2, capacity errors 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Graph6(_) => 2,
            _ => 1,
        }
    }
}
