use thiserror::Error;

pub type Result<T> = std::result::Result<T, ZetaError>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZetaError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("unsupported order {order} (supported: {min}..={max})")]
    UnsupportedOrder { order: u64, min: u64, max: u64 },

    #[error("size {n} exceeds the brute-force limit {limit}")]
    Size { n: u64, limit: u64 },

    #[error("tolerance {tol:e} is below the attainable floor {floor:e}")]
    ToleranceUnreachable { tol: f64, floor: f64 },

    /// A quantity that is positive by construction came out non-positive.
    #[error("internal consistency violated: {0}")]
    Internal(String),
}

impl ZetaError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        ZetaError::Domain(msg.into())
    }
}
