use thiserror::Error;

/// Domain errors. Variant names are part of the CLI contract and are
/// printed verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MalformedPartition: {0}")]
    MalformedPartition(String),

    #[error("GroundSetMismatch: expected m={expected}, got m={got}")]
    GroundSetMismatch { expected: usize, got: usize },

    #[error("NotAVertexLabel: {0}")]
    NotAVertexLabel(String),

    #[error("GroundSetTooSmall: m={0} (need m >= 4)")]
    GroundSetTooSmall(usize),

    #[error("UnsupportedFormat: {0:?}")]
    UnsupportedFormat(String),

    #[error("ImproperDirection: {0}")]
    ImproperDirection(String),

    #[error("NotARefinement: {0}")]
    NotARefinement(String),

    #[error("DegenerateLinkage: {0}")]
    DegenerateLinkage(String),

    #[error("NotClosable: {0}")]
    NotClosable(String),

    #[error("ParallelEdges: {0}")]
    ParallelEdges(String),

    #[error("DegeneratePolygon: {0}")]
    DegeneratePolygon(String),

    #[error("IoError: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
