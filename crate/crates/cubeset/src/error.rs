use thiserror::Error;

use crate::cube_theory::Theory;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what}: index {index} outside 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("side must be 0 or 1, got {0}")]
    InvalidSide(u8),
    #[error("{kind} is not admitted by theory {theory}")]
    NotAdmitted { kind: &'static str, theory: Theory },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("enumeration bound exceeded: {0}")]
    BoundsExceeded(String),
    #[error("map is not a member of {0}")]
    NotMember(Theory),
    #[error("{sub} is not a subtheory of {sup}")]
    NotSubtheory { sub: Theory, sup: Theory },
    #[error("requires a theory inside {{meet, join}}, got {0}")]
    NotEzTheory(Theory),
    #[error("theory {0} lacks a required symbol: {1}")]
    MissingSymbol(Theory, &'static str),
    #[error("invalid map table: {0}")]
    InvalidTable(String),
    #[error("theory mismatch: {0} vs {1}")]
    TheoryMismatch(Theory, Theory),
    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),
    #[error("cube {index} does not exist in dimension {dim}")]
    UnknownCube { dim: usize, index: usize },
    #[error("not decomposition-closed: {0}")]
    NotDecompositionClosed(String),
    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),
    #[error("construction failed: {0}")]
    Inconsistent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
