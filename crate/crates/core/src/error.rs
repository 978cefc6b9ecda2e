use thiserror::Error;

/// Errors raised by the group engine.
///
/// `BudgetExceeded` is never a negative answer: callers that need certainty
/// must treat it as "unknown".
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image list is not a permutation: {0}")]
    NotAPermutation(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("not a normal subgroup: {0}")]
    NotNormal(String),
    #[error("invalid prime set: {0}")]
    InvalidPi(String),
    #[error("parse error at line {line}{}: {msg}", .generator.map(|g| format!(", generator {g}")).unwrap_or_default())]
    Parse {
        line: usize,
        generator: Option<usize>,
        msg: String,
    },
    #[error("invalid subgroup selection: {0}")]
    Selector(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    pub fn budget(what: impl Into<String>) -> Self {
        Error::BudgetExceeded(what.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
