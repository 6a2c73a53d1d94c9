use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {part}.{index} is out of range")]
    VertexOutOfRange { part: usize, index: usize },

    #[error("slot {0} is not an allowed edge of the host")]
    DisallowedSlot(String),

    #[error("graph is not partite-free")]
    NotPartiteFree,

    #[error("graph is not partite-saturated")]
    NotSaturated,

    #[error("pattern is not 2-connected")]
    NotTwoConnected,

    #[error("pattern is not a tree on at least 3 vertices")]
    NotATree,

    #[error("pattern is not K4")]
    NotK4,

    #[error("instance too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
