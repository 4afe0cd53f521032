use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("vertex {vertex} is out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("between() needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertex {0} belongs to M")]
    VertexInSet(usize),
    #[error("the subgraph induced by M is cyclic")]
    CyclicSet,
    #[error("vertex {0} is not consistent with M")]
    InconsistentVertex(usize),
    #[error("vertex {0} has undirected neighbours and cannot be contracted")]
    HasUndirectedEdges(usize),
    #[error("undirected edges do not form a matching at vertex {0}")]
    NotAMatching(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("instance has {size} vertices, brute force is limited to {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    /// Whether the error signals a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
