use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at a singular point (pole, degenerate chart).
    #[error("singular argument: {0}")]
    Singular(String),

    /// An iterative solve failed to reach its tolerance.
    #[error("non-convergence: {0}")]
    NonConvergence(String),

    /// Geometric degeneracy: the requested configuration is not realizable
    /// (overlapping doubling holes, violated separation conditions).
    #[error("degenerate configuration: {0}")]
    Degenerate(String),

    /// Sampling too coarse for the requested finite-difference surrogate.
    #[error("insufficient sampling: {0}")]
    Sampling(String),

    /// A pipeline stage failed; carries the stage name for CLI reporting.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
