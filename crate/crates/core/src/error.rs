use thiserror::Error;

/// Errors raised anywhere in the census library.
///
/// The variants fall into three families that the command-line front end
/// maps onto distinct exit codes: bad input, exceeded resource bounds, and
/// internal consistency failures (non-integral averages and the like).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{op}: argument must be positive")]
    ZeroArgument { op: &'static str },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} exceeds the limit of {limit} (got {actual})")]
    ResourceLimit { what: String, limit: u64, actual: u64 },

    #[error("coefficient of x^{degree} is not divisible by {divisor}")]
    NotDivisible { degree: usize, divisor: String },

    #[error("non-integral average in {context}: {detail}")]
    NonIntegral { context: String, detail: String },

    #[error("automorphism does not stabilize the given set")]
    NotStable,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::NonIntegral { .. } | Error::NotDivisible { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
