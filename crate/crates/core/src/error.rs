use thiserror::Error;

use crate::setpart::DiagramShape;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} appears in more than one block")]
    OverlappingBlocks { vertex: usize },
    #[error("vertex {vertex} is not covered by any block")]
    UncoveredVertex { vertex: usize },
    #[error("block {index} is empty")]
    EmptyBlock { index: usize },
    #[error("vertex {vertex} out of range 1..={total}")]
    VertexOutOfRange { vertex: usize, total: usize },
    #[error("not an (l+k)\\{n} diagram: {reason}")]
    NotBrauerGrood { n: usize, reason: String },
    #[error("not a Brauer diagram: block of size {size}")]
    NotBrauer { size: usize },
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch {
        expected: DiagramShape,
        found: DiagramShape,
    },
    #[error("diagram kind not admitted in {context} context: {reason}")]
    KindNotInContext { context: String, reason: String },
    #[error("jellyfish heads have {left} and {right} legs")]
    LegCountMismatch { left: usize, right: usize },
    #[error("symplectic dimension must be even, got n={n}")]
    OddDimension { n: usize },
    #[error("functor {functor} cannot realize this diagram: {reason}")]
    KindMismatch { functor: String, reason: String },
    #[error("size limit exceeded: {needed} entries > cap {cap}")]
    SizeLimitExceeded { needed: u128, cap: u128 },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("numeric mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("parse error at position {position}: {reason}")]
    Parse { position: usize, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown {what} '{name}'")]
    Unknown { what: &'static str, name: String },
}

impl Error {
    pub(crate) fn parse(position: usize, reason: impl Into<String>) -> Self {
        Error::Parse {
            position,
            reason: reason.into(),
        }
    }
}
