use thiserror::Error;

/// Everything that can go wrong while building root data, pairs or spectra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{0} is not a root")]
    NotARoot(String),

    #[error("{0} is not dominant")]
    NotDominant(String),

    #[error("{0} is not integral")]
    NotIntegral(String),

    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: String,
    },

    #[error("invalid subsystem: {0}")]
    InvalidSubsystem(String),

    #[error("compact roots are not closed: {0}")]
    NotClosed(String),

    #[error("root set is not graded: {0}")]
    NotGraded(String),

    #[error("listed roots are not a simple system: {0}")]
    NotSimpleList(String),

    #[error("no noncompact roots: K equals G")]
    NoNoncompact,

    #[error("not spin: {0}")]
    NotSpin(String),

    #[error("inconsistent character: {0}")]
    InconsistentCharacter(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
