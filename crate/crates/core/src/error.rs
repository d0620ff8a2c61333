use thiserror::Error;

/// A string that is not a canonical scalar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse scalar from {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseScalarError),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("matrix has determinant {0}, expected 1")]
    NotUnimodular(String),
    #[error("matrix {0} is not in SU(2)")]
    NotSpecialUnitary(String),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("weight mismatch: {left} vs {right}")]
    WeightMismatch { left: u32, right: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("group {name} closure exceeded {limit} elements")]
    GroupTooLarge { name: String, limit: usize },
    #[error("group {name} has order {found}, expected {expected}")]
    WrongOrder {
        name: String,
        found: usize,
        expected: usize,
    },
    #[error("section of weight {weight} is not invariant under {group}")]
    NotInvariant { group: String, weight: u32 },
    #[error("sample set does not determine weight {0}")]
    Reconstruction(u32),
    #[error("invalid weight {0}: {1}")]
    InvalidWeight(i64, &'static str),
    #[error("precision {have} too small, need at least {need}")]
    InsufficientPrecision { have: usize, need: usize },
    #[error("incompatible series: {0}")]
    SeriesMismatch(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
