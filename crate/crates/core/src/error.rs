use thiserror::Error;

/// Errors raised by the exact-algebra layers and the theta engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {msg}")]
    Syntax { offset: usize, msg: String },

    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("malformed rational literal at byte {offset}: {msg}")]
    BadRational { offset: usize, msg: String },

    #[error("not homogeneous: term {t1} has degree {d1} but term {t2} has degree {d2}")]
    NotHomogeneous {
        d1: i64,
        d2: i64,
        t1: String,
        t2: String,
    },

    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,

    #[error("operands belong to different gradings or variable sets")]
    GradingMismatch,

    #[error("matrix dimensions are inconsistent: {0}")]
    Dimension(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid module presentation: {0}")]
    InvalidPresentation(String),

    #[error("Hilbert data inconclusive: {0}")]
    Inconclusive(String),

    #[error("certification budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("periodicity certificate failed: {0}")]
    PeriodicityFailure(String),

    #[error("expected an integer value, got {0}")]
    NonInteger(String),

    #[error("unsupported for non-standard gradings: {0}")]
    NonStandardGrading(String),

    #[error("input error: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
