use crate::ncalg::Context;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("context mismatch: {0:?} vs {1:?}")]
    ContextMismatch(Context, Context),
    #[error("invalid context: n={n}, N={degree}")]
    InvalidContext { n: usize, degree: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("element is not primitive (first defect in degree {0})")]
    NotPrimitive(usize),
    #[error("derivation is not special (first defect in degree {0})")]
    NotSpecial(usize),
    #[error("double bracket is not tangential")]
    NotTangential,
    #[error("linear system infeasible: {0}")]
    Infeasible(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
