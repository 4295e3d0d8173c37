use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("qubit count must be between 1 and {max}, got {got}")]
    QubitCount { got: usize, max: usize },

    #[error("expected {expected} amplitudes, got {got}")]
    AmplitudeLength { expected: usize, got: usize },

    #[error("state is not normalized (norm squared {0})")]
    NotNormalized(f64),

    #[error("matrix is not square with side 2^n: {rows}x{cols}")]
    BadShape { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("trace is not 1 (got {0})")]
    BadTrace(f64),

    #[error("operator is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("invalid bipartition: {0}")]
    Bipartition(String),

    #[error("operation needs {expected} qubits, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("states are not orthonormal (overlap {overlap:e})")]
    NotOrthonormal { overlap: f64 },

    #[error("bit pattern {0:?} is invalid")]
    BitPattern(String),

    #[error("diagram {0} is not canonical (must start with 0 and have at least 2 bits)")]
    NonCanonical(String),

    #[error("value {value} outside [0, 1] for {what}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("qubit count {got} outside {min}..={max}")]
    Range { got: usize, min: usize, max: usize },

    #[error("operator has support outside the {0} block")]
    OutsideBlock(&'static str),

    #[error("superposition terms: {0}")]
    Terms(String),

    #[error("invalid partition tree: {0}")]
    PartitionTree(String),
}

pub type Result<T> = std::result::Result<T, Error>;
