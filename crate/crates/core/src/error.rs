use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid dimension: expected {expected}, found {found}")]
    InvalidDimension { expected: usize, found: usize },

    #[error("degenerate state: vector norm is zero")]
    DegenerateState,

    #[error("conditioning event has vanishing probability ({0:e})")]
    ZeroCondition(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unsupported event: {0}")]
    UnsupportedEvent(String),

    /// A computed quantity left its mathematically allowed range. This is a
    /// logic error, not a physics result.
    #[error("internal invariant failure: {what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("parameter file: {0}")]
    Config(String),
}

impl Error {
    /// True for failures of the crate's own invariants (as opposed to bad
    /// input).
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::OutOfRange { .. })
    }
}
