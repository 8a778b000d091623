use core::fmt;

/// Errors reported by the evaluation routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// A mode index `j` (or `q`) exceeded the total quanta `N`.
    ModeIndexOutOfRange { index: u32, n_total: u32 },
    /// Total quanta beyond the supported range (log-domain combinatorics
    /// are validated only up to `N = 200`).
    TotalQuantaTooLarge { n_total: u32, max: u32 },
    /// A vector or matrix dimension did not match the expected sector size.
    DimensionMismatch { expected: usize, got: usize },
    /// Amplitudes (or probabilities) were not normalized to unity.
    NotNormalized { norm: f64 },
    /// A scalar argument fell outside its documented domain.
    ParameterOutOfRange { name: &'static str, value: f64 },
    /// A transfer matrix violated the special-unitary structure badly enough
    /// to break an algebraic guarantee (e.g. |γ₊|² + |γ₋|² = 2).
    InvalidTransferMatrix { defect: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::ModeIndexOutOfRange { index, n_total } => {
                write!(f, "mode index {index} exceeds total quanta {n_total}")
            }
            Error::TotalQuantaTooLarge { n_total, max } => {
                write!(f, "total quanta {n_total} exceeds supported maximum {max}")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::NotNormalized { norm } => {
                write!(f, "amplitudes not normalized: Σ|c|² = {norm}")
            }
            Error::ParameterOutOfRange { name, value } => {
                write!(f, "parameter `{name}` = {value} outside its domain")
            }
            Error::InvalidTransferMatrix { defect } => {
                write!(f, "transfer matrix violates SU(2) structure (defect {defect:.3e})")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
