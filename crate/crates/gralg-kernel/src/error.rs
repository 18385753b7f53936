use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("a graded ring needs at least 2 variables, got {0}")]
    TooFewVariables(usize),
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },
    #[error("exponent or degree out of range in {0}")]
    ExponentOverflow(String),
    #[error("entry ({row}, {col}) must be homogeneous of degree {expected}")]
    NonHomogeneous { row: usize, col: usize, expected: i32 },
    #[error("quotient generator {0} is not homogeneous of positive degree")]
    BadQuotient(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("differential {index} composed with {next} is not zero", next = index + 1)]
    NotAComplex { index: usize },
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}
