use thiserror::Error;

/// Errors raised by the exact kernel, the number theory routines, the
/// classifier, the constructors and the tiling file format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed discriminants: sqrt({0}) and sqrt({1})")]
    MixedDiscriminant(u64, u64),
    #[error("discriminant {0} is not squarefree")]
    NotSquarefree(u64),
    #[error("invalid number `{0}`")]
    ParseNumber(String),
    #[error("degenerate triangle: {0}")]
    DegenerateTriangle(String),
    #[error("singular curve: {0}")]
    SingularCurve(String),
    #[error("point not on curve: {0}")]
    NotOnCurve(String),
    #[error("point at infinity has no affine preimage")]
    PointAtInfinity,
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(String, String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("boundary parameter gives a degenerate or commensurable-angle triangle: {0}")]
    DegenerateFamily(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no gluing orientation satisfies the angle and divisibility conditions")]
    NoGlueOrientation,
    #[error("tiling format error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("tiling format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
