use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("variable `{0}` has no assigned value")]
    UnassignedVariable(String),
    #[error("zero substituted into a negative power of `{0}`")]
    ZeroToNegativePower(String),
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("division is not exact in ring {0}")]
    NotDivisible(String),
    #[error("element is not invertible in ring {0}")]
    NotInvertible(String),
    #[error("ring {0} is not a field")]
    NotAField(String),
    #[error("ring {0} is not supported for this operation: {1}")]
    Unsupported(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("diagram flavor mismatch: {0} vs {1}")]
    FlavorMismatch(String, String),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("unbalanced word `{0}`")]
    UnbalancedWord(String),
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("quantum integer [{0}] vanishes at the chosen parameter")]
    VanishingQuantumInteger(usize),
    #[error("algebra has a nonzero radical of dimension {0}")]
    NonzeroRadical(usize),
    #[error("block does not split over the base ring: {0}")]
    NonSplitBlock(String),
    #[error("trace functional missing")]
    TraceMissing,
    #[error("regime is not oriented")]
    RegimeNotOriented,
    #[error("regime is not rigid (straightening scalar is not invertible)")]
    RegimeNotRigid,
    #[error("unit object is not a direct summand of {0}")]
    NotASummand(String),
    #[error("subspace is not nilpotent")]
    NotNilpotent,
    #[error("hom space is empty: {0}")]
    EmptyHom(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
