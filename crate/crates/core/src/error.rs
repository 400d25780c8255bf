use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside the supported domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The two classes have r·c' − r'·c = 0, so their wall is a vertical line.
    #[error("no semicircular wall: r·c' − r'·c = 0")]
    NoSemicircularWall,

    /// The wall formula produced a nonpositive squared radius.
    #[error("empty wall: squared radius {0} is not positive")]
    EmptyWall(String),

    /// A linear system without a unique solution.
    #[error("rank-deficient system: {0}")]
    RankDeficient(String),

    /// A point lies exactly on a reference wall, so its chamber is undefined.
    #[error("ambiguous chamber: {0}")]
    Ambiguous(String),

    /// A sign or normalization convention failed an internal consistency check.
    #[error("convention error: {0}")]
    Convention(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
