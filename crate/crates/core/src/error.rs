use thiserror::Error;

/// Errors raised by the library. Every variant carries enough context for a
/// one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AtlasError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("group/size mismatch: {0}")]
    KindMismatch(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not in the Lie algebra of {0}")]
    NotInAlgebra(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("invalid Levi label: {0}")]
    InvalidLevi(String),

    #[error("no consistent Gram sign assignment: {0}")]
    SignClash(String),

    #[error("sheet is not Dixmier: {0}")]
    NonDixmier(String),

    #[error("unsupported Katsylo group order {0} (only 1 and 2 are supported)")]
    UnsupportedKatsylo(u64),

    #[error("outside supported scope: {0}")]
    OutOfScope(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid sheet base point: {0}")]
    InvalidPoint(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = AtlasError> = std::result::Result<T, E>;
