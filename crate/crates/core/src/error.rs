use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("oracle size cap exceeded: {size} > {cap}")]
    OracleCap { size: usize, cap: usize },

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("diagram has no chords")]
    EmptyDiagram,

    #[error("gap {gap} out of range for a diagram with {positions} positions")]
    InvalidGap { gap: usize, positions: usize },

    #[error("intersection graph is a clique")]
    CliqueInput,

    #[error("component containing vertex {vertex} is not distance hereditary")]
    NotDistanceHereditary { vertex: usize },

    #[error("invalid construction: {0}")]
    InvalidConstruction(String),

    #[error("invalid split: {0}")]
    InvalidSplit(String),

    #[error("invalid tree path: {0}")]
    InvalidPath(String),

    #[error("invalid representation: {0}")]
    InvalidRep(String),
}

pub type Result<T> = std::result::Result<T, Error>;
