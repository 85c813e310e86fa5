use thiserror::Error;

/// Errors raised by the index engine, the geometry layer and the commands.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate orbit: {0}")]
    DegenerateOrbit(String),
    #[error("degenerate point: {0}")]
    DegeneratePoint(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("outside the validity regime: {0}")]
    Regime(String),
    #[error("normalization failed: {0}")]
    Normalization(String),
    #[error("path is not in Sigma*: {0}")]
    NotAdmissible(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("sampling failed: {0}")]
    Sampling(String),
}

impl Error {
    /// Process exit code used by the command layer.
    ///
    /// 1 = mathematical mismatch, 2 = degenerate or invalid parameters,
    /// 3 = sampling / environment failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Internal(_) | Error::InvalidCertificate(_) => 1,
            Error::Sampling(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
