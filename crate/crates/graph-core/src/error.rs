use thiserror::Error;

/// Errors shared across the graph operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("graph of order {n} exceeds the exact-computation limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
}

/// Parse/emit failures for the graph6 text format, reported distinctly.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header byte {byte:#04x}")]
    MalformedHeader { byte: u8 },
    #[error("order {n} not supported (only the 1-byte size form, n <= 62)")]
    UnsupportedSize { n: usize },
    #[error("truncated bit body: expected {expected} body bytes, found {found}")]
    TruncatedBody { expected: usize, found: usize },
    #[error("{found} trailing bytes after the bit body")]
    TrailingGarbage { found: usize },
    #[error("invalid byte {byte:#04x} at position {pos} (must be in 63..=126)")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("nonzero padding bits in the final body byte")]
    DirtyPadding,
}
