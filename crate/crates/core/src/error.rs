use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("malformed literal `{text}`: {reason}")]
    Parse { text: String, reason: String },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("{m} and {n} are not coprime with 0 < m < n")]
    NotCoprime { m: u64, n: u64 },

    #[error("kappa mismatch: {0} vs {1}")]
    KappaMismatch(String, String),

    #[error("vector is not dominant: {0}")]
    NotDominant(String),

    #[error("vector is not fixed by the diagram automorphism: {0}")]
    NotInvariant(String),

    #[error("element {0} is not of length zero")]
    NotLengthZero(String),

    #[error("element {0} does not preserve the block structure")]
    NotBlockPreserving(String),

    #[error("newton criterion fails for {0}")]
    CriterionFails(String),

    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),

    #[error("unsupported twist: {0}")]
    Unsupported(String),

    /// A verification that the underlying mathematics guarantees has failed.
    #[error("internal verification failure: {0}")]
    Verification(String),
}
