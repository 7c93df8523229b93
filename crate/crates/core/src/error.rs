use thiserror::Error;

use crate::digraph::GammaWitness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("arc ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("vertex ordering is not a permutation of 0..{n}")]
    InvalidOrdering { n: usize },

    #[error("operation requires a symmetric digraph")]
    NotSymmetric,

    #[error("operation requires a tournament")]
    NotTournament,

    #[error("digraph is not balanced; compute a level partition first")]
    NotBalanced,

    #[error("{what} refused: size {size} exceeds limit {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("ordering is not a strong ordering: {0}")]
    NotStrongOrdering(GammaWitness),

    #[error("no general dominating set exists: vertices {0:?} have empty neighbourhoods")]
    Undominatable(Vec<usize>),

    #[error("domination certificate failed its own check: {0}")]
    DualityGap(String),

    #[error("walk is not valid in the host graph: {0}")]
    InvalidWalk(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
