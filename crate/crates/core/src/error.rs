use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed parent/successor map or an inconsistent basis element.
    #[error("structural error: {0}")]
    Structure(String),

    /// Invalid input for an otherwise well-formed object.
    #[error("domain error: {0}")]
    Domain(String),

    /// Colour mismatch in an operadic composition.
    #[error("colour error: {0}")]
    Colour(String),

    /// A linear-combination key is missing from the relevant basis index.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// Consecutive differentials do not compose to zero.
    #[error("invalid chain complex: d∘d ≠ 0 on basis element {witness}")]
    ComplexInvalid { witness: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("incomplete coefficients: {0}")]
    IncompleteCoefficients(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
