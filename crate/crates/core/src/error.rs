use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("rank {rank} out of range 1..={max}")]
    RankOutOfRange { rank: usize, max: usize },

    #[error("eigenvalue {index} did not converge within {sweeps} QL sweeps")]
    Convergence { index: usize, sweeps: usize },

    #[error("near-duplicate eigenvalues at index {index}: gap {gap:e}")]
    NearDuplicate { index: usize, gap: f64 },

    #[error("Newton refinement of zero {index} left its bracket ({lower}, {upper}): reached {value}")]
    RefinementDivergence {
        index: usize,
        lower: f64,
        upper: f64,
        value: f64,
    },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("I/O error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Self {
        Error::Io {
            path: path.display().to_string(),
            message: err.to_string(),
        }
    }
}
