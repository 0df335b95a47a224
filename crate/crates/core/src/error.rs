use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("vector length {got} does not match expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("entry {0} is out of range for the field")]
    EntryOutOfRange(u32),
    #[error("subspace is not contained in the given superspace")]
    NotSubspace,
    #[error("ambient dimension {0} is odd; symplectic operations need an even ambient")]
    OddAmbient(usize),
    #[error("invalid Pauli token `{0}`")]
    InvalidToken(String),
    #[error("exponent {exponent} out of range for p = {p}")]
    ExponentOutOfRange { exponent: u64, p: u32 },
    #[error("code has no logical operators (the search set is empty)")]
    NoLogicalOperators,
    #[error("code is not CSS")]
    NotCss,
    #[error("invalid Goursat data: {0}")]
    InvalidGoursatData(String),
    #[error("syndrome is not in the image of the parity check")]
    InconsistentSyndrome,
    #[error("gauge space does not respect weight")]
    NotWeightRespecting,
    #[error("invalid probability {0}")]
    InvalidProbability(String),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("label is not in the required subspace: {0}")]
    LabelNotInSubspace(&'static str),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
