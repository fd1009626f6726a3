use thiserror::Error;

use crate::graph::ValidityReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    Invalid(ValidityReport),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("rank {rank} is not supported here (need {need})")]
    UnsupportedRank { rank: usize, need: &'static str },
    #[error("edge of color {color} at white vertex {white} does not exist")]
    DanglingEdge { color: usize, white: usize },
    #[error("edge colors differ: {0} vs {1}")]
    ColorMismatch(usize, usize),
    #[error("graph has no internal color-0 propagator")]
    NoInternalPropagator,
    #[error("expected a vacuum graph (every vertex matched by color 0)")]
    NotVacuum,
    #[error("graph is empty")]
    EmptyGraph,
    #[error("graph is not connected")]
    NotConnected,
    #[error("not a crystallization: {0}")]
    NotCrystallization(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("request too large: {0}")]
    Infeasible(String),
    #[error("degree mismatch (internal bug): jackets give {jackets}, face formula gives {faces}")]
    DegreeMismatch { jackets: String, faces: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("document error: {0}")]
    Document(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
