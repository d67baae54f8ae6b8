use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not a supported prime power (supported: 2, 3, 4, 5, 7, 8, 9, 11, 13, 16)")]
    NonPrimePower(u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("element {element} is not in GF({q})")]
    InvalidElement { element: u8, q: u8 },

    #[error("vector of length {found} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspaces live in different ambient spaces (GF({q1})^{n1} vs GF({q2})^{n2})")]
    AmbientMismatch { q1: u8, n1: usize, q2: u8, n2: usize },

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("budget exceeded: {what} needs {required} items, budget is {budget}")]
    BudgetExceeded { what: String, required: String, budget: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("family is empty")]
    EmptyFamily,

    #[error("search report does not carry a complete witness enumeration")]
    NotExhaustive,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("negative value where a count was expected: {0}")]
    NegativeCount(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
