use thiserror::Error;

/// Failures raised by the exact arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,

    /// An element failed to invert because the defining polynomial of its
    /// extension has a nontrivial factor.
    #[error("defining polynomial {modulus} is reducible: common factor {factor}")]
    Reducible { modulus: String, factor: String },

    #[error("invalid relation system: {0}")]
    Configuration(String),

    #[error("incompatible operands: {0}")]
    Mismatch(String),

    #[error("division is not exact")]
    InexactDivision,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
