use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),
    #[error("vertex {0} lies in more than one cell")]
    OverlappingCells(usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("matrix: {0}")]
    Matrix(String),
    #[error("not a valid switching set or partition: {0}")]
    InvalidSwitching(String),
}

pub type Result<T> = std::result::Result<T, Error>;
