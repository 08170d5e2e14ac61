use thiserror::Error;

/// Errors produced anywhere in the compression pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// Two objects that must share a mode count (or vector dimension) do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data failed validation (non-Hermitian matrix, bad probabilities, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// An exact enumeration would exceed the configured sequence cap.
    #[error("enumeration of {requested} sequences exceeds cap of {cap}")]
    Resource { requested: u128, cap: u64 },

    /// Not enough field modes to hold the longest codeword.
    #[error("capacity error: {available} modes available, {required} required")]
    Capacity { available: usize, required: usize },

    /// A ket in an encoded state is not a codeword of the book.
    #[error("corrupted encoding: ket {ket} is not a codeword")]
    Corruption { ket: String },

    /// The out-of-band total length does not match the codebook.
    #[error("side-information mismatch: codebook encodes {expected} letters, l_t = {found}")]
    SideInfoMismatch { expected: usize, found: usize },

    /// A circuit stage was applied to a state it does not accept.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
