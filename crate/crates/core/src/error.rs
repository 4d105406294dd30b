use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an embedding needs at least one factor")]
    NoFactors,

    #[error("l and d have different lengths ({l} vs {d})")]
    ShapeMismatch { l: usize, d: usize },

    #[error("factor dimension must be positive, got {0}")]
    NonPositiveDimension(i64),

    #[error("Veronese degree must be positive, got {0}")]
    NonPositiveDegree(i64),

    #[error("multidegree has {found} entries but the embedding has {expected} factors")]
    LengthMismatch { expected: usize, found: usize },

    #[error("r = {r} exceeds the {kind} cap of {cap}")]
    CapExceeded {
        kind: &'static str,
        r: usize,
        cap: usize,
    },

    #[error("invalid cap: {0}")]
    InvalidCap(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("expected a nondecreasing list, got {0:?}")]
    Unsorted(Vec<i64>),

    /// Two independent routes to the same quantity disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
