use k3_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),

    /// Classification was asked for a polynomial with a root of multiplicity ≥ 4.
    #[error("polynomial is not twist-minimal: factor {factor} has multiplicity {multiplicity}; run twist_minimize first")]
    NotTwistMinimal { factor: String, multiplicity: u32 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("singular model: {0}")]
    Singular(String),

    #[error("map is not well defined: {0}")]
    InvalidMap(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("undecidable: {0}")]
    Undecidable(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
