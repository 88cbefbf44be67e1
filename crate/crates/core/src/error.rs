use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..{0}")]
    NotAPermutation(usize),

    #[error("word {word:?} is not reduced")]
    NotReduced { word: Vec<usize> },

    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("{element} is not a minimal coset representative for {shape:?}")]
    NotMinimalRepresentative { element: String, shape: Vec<u32> },

    #[error("subset is not extremal: {0}")]
    NotExtremal(String),

    #[error("tableau {0} is not a vertex of the ambient crystal")]
    UnknownVertex(String),

    #[error("subsets belong to different ambient crystals")]
    AmbientMismatch,

    #[error("tensor component has {0} source vertices, expected exactly one")]
    NoUniqueSource(usize),

    #[error("atom expansion failed: {0}")]
    Expansion(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
