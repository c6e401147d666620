use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Invalid ring parameters, spotty parameters or code geometry.
    #[error("configuration error: {0}")]
    Config(String),

    /// An element, vector or polynomial argument lies outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is not defined for this ring family.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An exhaustive enumeration would exceed the configured budget.
    #[error("enumeration budget exceeded: {what} needs {required} evaluations, budget is {budget}")]
    Budget {
        what: String,
        required: u128,
        budget: u128,
    },

    /// A transform produced a non-integral coefficient after the final division.
    #[error("integrality error: {0}")]
    Integrality(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
