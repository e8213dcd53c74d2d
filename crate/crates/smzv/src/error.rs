use thiserror::Error;

/// Everything that can go wrong outside of plain programmer error.
///
/// Structural misuse that a caller can hit with runtime data (bad truncation,
/// inadmissible index, unknown identity name) is reported through this enum;
/// violations of internal invariants panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A word operation that needs every monomial to start with `y` saw one
    /// starting with `x`.
    #[error("polynomial has a monomial starting with x (not in the y-headed subalgebra)")]
    NotInH1,

    /// Two t-adic series with different truncation orders were combined.
    #[error("t-adic truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    /// An operation that needs at least one index part got the empty index.
    #[error("index must be nonempty")]
    EmptyIndex,

    /// A convergent-sum evaluation was asked for a divergent index.
    #[error("index ({0}) is not admissible (last part must be >= 2)")]
    NotAdmissible(String),

    /// A coefficient past the truncation order was requested. Truncated data
    /// does not know those coefficients, so this is an error rather than a
    /// silent zero.
    #[error("coefficient of t^{requested} requested from a series truncated at t^{truncation}")]
    TruncationExceeded { requested: usize, truncation: usize },

    /// The numeric layer could not meet the requested decimal precision
    /// within its iteration bounds.
    #[error("cannot reach {digits} decimal digits: {reason}")]
    PrecisionUnreachable { digits: u32, reason: String },

    /// Unrecognized generating-series identity name.
    #[error("unknown series identity {0:?}")]
    UnknownLemma(String),

    /// Unrecognized verification target or summary-identity name.
    #[error("unknown identity or target {0:?}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, Error>;
