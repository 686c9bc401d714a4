use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{name}` has non-positive degree {degree}")]
    InvalidDegree { name: String, degree: i64 },
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("d∘d ≠ 0: a boundary does not lie in the cycle module")]
    NotAComplex,
    #[error("vector does not lie in the span of the given generators")]
    NotInSpan,
    #[error("presentation is not homogeneous for the declared grading")]
    NotHomogeneous,
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("invalid link: {0}")]
    InvalidLink(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("time budget exceeded")]
    Timeout,
}
