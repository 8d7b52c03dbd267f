use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An intermediate value left the `i64` range.
    #[error("arithmetic overflow")]
    Overflow,

    /// A routine was called outside its documented precondition.
    #[error("precondition violated: {0}")]
    Contract(&'static str),

    #[error("brute-force box holds {volume} points, above the cap of {cap}")]
    CapExceeded { volume: u128, cap: u128 },

    #[error("invalid region: {0}")]
    Region(String),
}

pub type Result<T> = std::result::Result<T, Error>;
