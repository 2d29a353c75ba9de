use crate::extremal::{SearchReport, TheoremRow};
use crate::regularity::DirectedPath;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("vertex count {n} outside supported range 1..={max}")]
    VertexCount { n: usize, max: usize },

    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexRange { v: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} handles at most {limit}, got {actual}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("direction vector has {got} bits but the graph has {expected} edges")]
    DirsLength { expected: usize, got: usize },

    #[error("malformed {format} at byte {offset}: {reason}")]
    Format {
        format: &'static str,
        offset: usize,
        reason: String,
    },

    #[error("empty vertex set: {0}")]
    EmptySet(&'static str),

    #[error("budget exhausted; best bound so far is inexact")]
    Budget { partial: Box<SearchReport> },

    #[error("path embedding stuck after {} vertices", prefix.vertices.len())]
    EmbeddingStuck { prefix: DirectedPath },

    #[error("D({}) = {} is below the lower bound {}", row.n, row.d_value, row.formula)]
    BelowBound { row: Box<TheoremRow> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
