use thiserror::Error;

/// Errors raised while building or querying finite spaces.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a space needs at least one point")]
    NoPoints,

    #[error("too many points: {0} (at most 64 are supported)")]
    TooManyPoints(usize),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("point index {index} is out of range for a space of {n} points")]
    OutOfRange { index: usize, n: usize },

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("open family must contain both the empty set and the whole space")]
    MissingEmptyOrFull,

    #[error("open family is not closed under union: {left} ∪ {right} is missing")]
    NotClosedUnderUnion { left: String, right: String },

    #[error("open family is not closed under intersection: {left} ∩ {right} is missing")]
    NotClosedUnderIntersection { left: String, right: String },

    #[error("expected one minimal open set per point: got {got}, expected {expected}")]
    BasisLength { expected: usize, got: usize },

    #[error("point `{0}` is not in its own minimal open set")]
    PointNotInOwnBasis(String),

    #[error("`{y}` lies in U_{x} but U_{y} is not contained in U_{x}")]
    BasisNotNested { x: String, y: String },

    #[error("input set must be nonempty")]
    EmptyInput,

    #[error("ball radius must be at least 1")]
    ZeroRadius,

    #[error("subset must be nonempty and proper")]
    EmptyOrFullSubset,

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("map must assign a codomain point to each of the {expected} domain points, got {got}")]
    MapArity { expected: usize, got: usize },

    #[error("topology enumeration supports 1 to 5 points, got {0}")]
    SizeTooLarge(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
