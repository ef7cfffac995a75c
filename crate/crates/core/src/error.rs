use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("odd-size Pfaffian (size {0})")]
    OddPfaffian(usize),
    #[error("symbolic size limit: {0}")]
    SymbolicLimit(String),
    #[error("zero gcd: every input polynomial is zero")]
    ZeroGcd,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("jacobi violation at ({i},{j},{k}): residual {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("contact undefined in even dimension {0}")]
    EvenDimension(usize),
    #[error("index is {0}, expected 1")]
    IndexNotOne(usize),
    #[error("not a representation at ({0},{1})")]
    NotRepresentation(usize, usize),
    #[error("not a Frobenius point")]
    NotFrobenius,
    #[error("irrational weight unsupported: characteristic polynomial {0}")]
    IrrationalWeight(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("size budget exceeded: {0}")]
    Budget(String),
    #[error("no relation among weights: {0}")]
    NoRelation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
