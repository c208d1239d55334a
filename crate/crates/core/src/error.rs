use thiserror::Error;

/// Errors raised by graph construction, parsing and the exact arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph order {0} outside 1..=62")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex subset is empty")]
    EmptySubset,
    #[error("graph6 parse error at byte {pos}: {msg}")]
    Graph6 { pos: usize, msg: String },
    #[error("extension type has {found} entries but the base graph has {expected} vertices")]
    TypeLength { expected: usize, found: usize },
    #[error("extension type entry {0} is zero")]
    ZeroTypeEntry(usize),
    #[error("malformed extension type at entry {pos}: {msg}")]
    TypeSyntax { pos: usize, msg: String },
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("invalid parameters for `{name}`: {msg}")]
    InvalidParams { name: String, msg: String },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
    #[error("unknown sign pattern {0}")]
    UnknownPattern(String),
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
