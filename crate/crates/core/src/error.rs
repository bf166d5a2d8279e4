use thiserror::Error;

use crate::poly::Polynomial;
use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("polynomial has a term {0} outside the coefficient basis")]
    MissingMonomial(String),

    #[error("probabilities do not sum to 1; residual sum - 1 = {residual}")]
    NotNormalized { residual: Box<Polynomial> },
    #[error("p_{} is identically zero", .0 + 1)]
    ZeroComponent(usize),
    #[error("p_{} is not positive at {point}", .index + 1)]
    NonPositive { index: usize, point: String },
    #[error("duplicate support label {0:?}")]
    DuplicateLabel(String),
    #[error("model has an empty support")]
    EmptySupport,
    #[error("parameter {0:?} declared twice")]
    DuplicateParameter(String),
    #[error("invalid domain for {name:?}: {reason}")]
    BadDomain { name: String, reason: String },
    #[error("support has {support} labels but pmf has {pmf} entries")]
    PmfLengthMismatch { support: usize, pmf: usize },

    #[error("column {} of the coefficient matrix is zero", .0 + 1)]
    ZeroColumn(usize),
    #[error("ground sets differ: {left} vs {right}")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("statistic has {got} values but the support has {expected} points")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parameter {0:?} appears in both models")]
    ParameterCollision(String),
    #[error("{name} = {value} is not strictly inside [{lo}, {hi}]")]
    OutOfDomain {
        name: String,
        value: Box<Rational>,
        lo: Box<Rational>,
        hi: Box<Rational>,
    },
    #[error("slice binds every parameter")]
    NoFreeParameters,

    #[error("unknown corpus model {0:?}")]
    UnknownName(String),
    #[error("bad corpus parameter: {0}")]
    BadParam(String),
    #[error("random model generation failed after {0} attempts")]
    GenerationFailed(usize),

    #[error("syntax error at position {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: String,
        found: String,
    },
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
    #[error("zero denominator at position {0}")]
    ZeroDenominator(usize),
    #[error("invalid rational {0:?}")]
    BadRational(String),

    #[error("{0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
