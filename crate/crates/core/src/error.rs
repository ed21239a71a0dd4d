use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::MAX_ORDER)]
    OrderTooLarge(usize),

    #[error("expected two distinct vertices, got {0} twice")]
    EqualVertices(usize),

    #[error("graph is disconnected; this operation assumes a connected graph")]
    Disconnected,

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("invalid parameters for family `{family}`: {message}")]
    InvalidFamily { family: String, message: String },

    #[error("order {order} is outside the supported range for {what} (max {max})")]
    EnumerationRange { what: &'static str, order: usize, max: usize },

    #[error("set is not a locating-dominating set")]
    NotLdSet,

    #[error("set is a locating-dominating set")]
    IsLdSet,

    #[error("sets must be non-empty and disjoint")]
    InvalidCoalitionPair,

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("part index {index} out of range for partition with {parts} parts")]
    PartOutOfRange { index: usize, parts: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal verification failed: {0}")]
    Internal(String),
}
