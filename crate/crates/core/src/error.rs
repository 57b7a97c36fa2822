use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph input: bad endpoint, self-loop, vertex out of range.
    #[error("input error: {0}")]
    Input(String),

    /// A family spec or edge list could not be parsed. `token` is the
    /// offending piece of text.
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// The exhaustive oracle refuses graphs above its vertex guard.
    #[error("capacity error: {what} has {n} vertices, guard is {limit}; {hint}")]
    Capacity {
        what: String,
        n: usize,
        limit: usize,
        hint: String,
    },

    /// A closed form was evaluated outside its validity domain.
    #[error("domain error for {formula}: {reason}")]
    Domain { formula: String, reason: String },

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(formula: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Domain {
            formula: formula.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
