use thiserror::Error;

/// Errors produced by the group, word, kernel and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {element} does not belong to {group}")]
    Domain { group: String, element: String },

    #[error("invalid group descriptor: {0}")]
    InvalidGroup(String),

    #[error("invalid vertex id {0}")]
    InvalidVertex(usize),

    #[error("loop edge [{0}, {0}]")]
    LoopEdge(usize),

    #[error("duplicate edge [{0}, {1}]")]
    DuplicateEdge(usize, usize),

    #[error("vertices {0} and {1} are not commuting")]
    NotCommuting(usize, usize),

    #[error("shuffle index {index} out of range for word of length {len}")]
    ShuffleIndex { index: usize, len: usize },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("integer overflow in vertex group arithmetic")]
    Overflow,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An internal invariant failed; indicates a bug, never bad input.
    #[error("consistency violation: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
