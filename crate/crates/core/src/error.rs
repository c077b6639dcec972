use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    #[error("malformed rational literal: {0:?}")]
    BadRational(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("algebra {name:?} violates the Jacobi identity at {failures} triple(s), first at ({a},{b},{c})")]
    JacobiViolation {
        name: String,
        failures: usize,
        a: usize,
        b: usize,
        c: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial degree {got} exceeds the cap {cap}")]
    DegreeCap { got: usize, cap: usize },

    #[error("commutator is not central-linear in the quadratic generators: {detail}")]
    NotCentralLinear { detail: String },

    #[error("empty interior: margin {margin} >= levels {levels}")]
    EmptyInterior { margin: usize, levels: usize },

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}
