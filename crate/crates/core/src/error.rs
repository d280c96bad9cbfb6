use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("state vector has (near-)zero norm and cannot be normalized")]
    DegenerateState,

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("operator is not Hermitian (deviation {0:e})")]
    NonHermitianOperator(f64),

    #[error("measurement outcome has probability {0:e}, too small to condition on")]
    ZeroProbabilityOutcome(f64),

    #[error("measurement setting out of range: {0}")]
    InvalidSetting(String),

    #[error("bad grid: {0}")]
    BadGrid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
