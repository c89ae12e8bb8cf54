use thiserror::Error;

/// Errors raised by graph construction, parsing and structural operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge index {index} out of range (graph has {edges} edges)")]
    EdgeOutOfRange { index: usize, edges: usize },
    #[error("endpoint {vertex} out of range (graph has {vertices} vertices)")]
    VertexOutOfRange { vertex: usize, vertices: usize },
    #[error("edge {0} is a loop and cannot be contracted")]
    ContractLoop(usize),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed face structure: {0}")]
    Faces(String),
    #[error("graph precondition violated: {0}")]
    Precondition(String),
}

/// Errors from exact polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("division leaves a nonzero remainder")]
    NonzeroRemainder,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("invalid interval: {0}")]
    Interval(String),
    #[error("expected exactly one root in the window, found {0}")]
    RootCount(usize),
    #[error("cannot parse coefficient {0:?}")]
    Coefficient(String),
}

/// Errors from the flow-counting oracle, enumeration and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkError {
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
