use thiserror::Error;

/// Errors raised by the two-level PT toolkit.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PtError {
    /// Eigenvalues form a complex-conjugate pair; the CPT machinery is undefined.
    #[error("broken PT phase: discriminant s^2 - r^2 sin^2(psi) = {discriminant:.6e} < 0")]
    BrokenPhase { discriminant: f64 },

    /// Eigenvectors coalesce and the CPT normalization diverges.
    #[error("exceptional point: cos(alpha) = {cos_alpha:.6e}")]
    ExceptionalPoint { cos_alpha: f64 },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),

    #[error("CPT self-pairing is not positive (re = {0:.6e})")]
    ZeroOrNegativeNorm(f64),

    #[error("state is not normalized under the chosen pairing (self-pairing = {0:.6e})")]
    NotNormalized(f64),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, PtError>;
