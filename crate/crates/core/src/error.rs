use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mask {bits:#b} has bits outside a ground set of {n} points")]
    BadMask { bits: u32, n: usize },

    #[error("point {point} is outside a ground set of {n} points")]
    BadPoint { point: usize, n: usize },

    #[error("point count {n} is outside 1..={cap}")]
    BadPointCount { n: usize, cap: usize },

    #[error("point count {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("theorem {theorem} has no hypothesis named `{name}`")]
    UnknownHypothesisName { theorem: String, name: String },

    #[error("invalid map: {0}")]
    BadMap(String),

    #[error("unknown demo `{0}`")]
    UnknownDemo(String),

    #[error("invalid search bounds: {0}")]
    BadBounds(String),

    #[error("{0}")]
    Parse(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
