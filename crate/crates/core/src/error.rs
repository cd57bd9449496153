use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CobError {
    #[error("endpoint mismatch: cannot compose {g_source} after {f_target}")]
    EndpointMismatch { f_target: String, g_source: String },
    #[error("trace requires an endomorphism, got {from} -> {to}")]
    NotEndomorphism { from: String, to: String },
    #[error("block shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("malformed sign word: {0:?} (expected characters '+' and '-')")]
    BadWord(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("ideal has no unit")]
    IdealHasNoUnit,
    #[error("idempotency check failed: {0}")]
    NotIdempotent(String),
    #[error("certificate step failed at level ({i},{j}): {step}")]
    CertificateStep { i: usize, j: usize, step: String },
    #[error("decomposition identity failed: {0}")]
    DecompositionIdentity(String),
    #[error("parity constraint violated: {0}")]
    ParityConstraint(String),
}
