use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Instance, policy, or configuration data violates an invariant.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Matrix or vector shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The simplex solver lost too much precision to certify a result.
    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    /// A problem that must be optimal for the requested quantity was not.
    #[error("problem infeasible: {0}")]
    Infeasible(String),

    /// Brute-force Hoffman computation only handles small systems.
    #[error("too many rows for exact Hoffman constant: {rows} > {cap}")]
    HoffmanCapExceeded { rows: usize, cap: usize },

    /// Assortment enumeration would exceed the configured cap.
    #[error("assortment enumeration too large: {count} sets exceed cap {cap}")]
    EnumerationCapExceeded { count: usize, cap: usize },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
