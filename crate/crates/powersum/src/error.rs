use num_bigint::BigInt;
use num_rational::BigRational;

/// Errors produced by matrix construction, the generating-function pipeline
/// and formula evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    InvalidOrder,

    #[error("order {order} exceeds the configured cap of {cap}; raise --max-order-cap or POWERSUM_MAX_ORDER_CAP")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("power {power} is outside 1..={order} for a matrix of order {order}")]
    PowerOutOfRange { power: usize, order: usize },

    #[error("column {column} is outside 1..={order}")]
    ColumnOutOfRange { column: usize, order: usize },

    #[error("matrix orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("power 0 is not supported by the matrix pipeline")]
    UnsupportedPower,

    #[error("evaluation point must be nonnegative, got {0}")]
    NegativeEvaluationPoint(BigInt),

    #[error("closed form produced the non-integer value {value} at n = {n}; this signals a pipeline bug")]
    NonIntegralResult { n: BigInt, value: BigRational },

    #[error("invalid serialized form: {0}")]
    InvalidSerialization(String),

    #[error("{0}")]
    Usage(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
