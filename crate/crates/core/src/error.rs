use thiserror::Error;

/// Errors produced by graph construction, parsing and the bound evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    Loop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graph6 cannot encode {0} vertices (limit 258047)")]
    TooManyVertices(usize),

    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("operation requires at least one vertex")]
    EmptyVertexSet,

    #[error("operation requires at least one edge")]
    Edgeless,

    #[error("operation requires minimum degree at least 1 (isolated vertex present)")]
    IsolatedVertex,

    #[error("parameter out of domain: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
