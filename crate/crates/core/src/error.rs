use thiserror::Error;

/// Errors shared across construction, verification, and serialization.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A construction or oracle would exceed a configured budget. Signals a
    /// deliberate refusal, never silent truncation.
    #[error("resource limit exceeded: {what} needs {needed}, limit is {limit}")]
    ResourceLimit {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    /// No construction exists for the requested parameters.
    #[error("construction infeasible: {0}")]
    Infeasible(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("construction invariant violated: {0}")]
    ConstructionBug(String),

    #[error("corrupt instance data: {0}")]
    Corrupt(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
