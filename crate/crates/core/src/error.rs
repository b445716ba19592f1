use std::fmt;

use thiserror::Error;

/// Location-tagged parse failure for polynomial, system and matrix text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    /// 1-based column number.
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("parse error at {0}")]
    Parse(ParseError),

    #[error("invalid variable list: {0}")]
    InvalidContext(String),

    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial involves more than one variable")]
    NotUnivariate,

    #[error("all generators are zero")]
    AllZeroGenerators,

    #[error("ideal is not zero-dimensional: no leading monomial is a pure power of {}", .variables.join(", "))]
    NotZeroDimensional { variables: Vec<String> },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric: entry ({row}, {col}) differs from its transpose")]
    NotSymmetric { row: usize, col: usize },

    #[error("interval endpoint {0} is a root; widen the interval")]
    EndpointIsRoot(String),

    #[error("empty interval: lower bound must be strictly below upper bound")]
    EmptyInterval,

    #[error("lexicographic basis is not in shape form: {0}; try a general-position coordinate change")]
    NotShapeForm(String),

    #[error("eliminant is not squarefree; the ideal is not radical")]
    NotRadical,

    #[error("no shape basis found after {trials} general-position trials")]
    ShapeUnobtainable { trials: usize },

    #[error("refinement did not settle within {0} bisection steps")]
    StepBudgetExceeded(usize),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Parse(e)
    }
}
