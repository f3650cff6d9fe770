use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter violated its domain (non-positive mass, force, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// A structural input was invalid (grid size, sampling, pixel table, ...).
    #[error("configuration error: {0}")]
    Config(String),
    /// A documented precondition was not met by the caller.
    #[error("precondition error: {0}")]
    Precondition(String),
    /// A target state or pattern had no usable content.
    #[error("degenerate target: {0}")]
    DegenerateTarget(String),
    /// An operation on an identically-zero quantity (projection, metrics).
    #[error("degenerate input: {0}")]
    Degenerate(String),
    /// Amplitude reached the grid edge. The linear potential is not periodic,
    /// so amplitude wrapping around the box is unphysical.
    #[error("wraparound guard: {0}")]
    Wraparound(String),
    /// Norm conservation broke down beyond tolerance during propagation.
    #[error("numerical guard: {0}")]
    NormDrift(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
