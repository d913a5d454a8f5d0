use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("limit at t = 0 does not exist (valuation {valuation})")]
    Pole { valuation: i64 },
    #[error("limit at t = 0 does not exist for structure constant ({i}, {j}, {k})")]
    PoleAt { i: usize, j: usize, k: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("products contradict the requested symmetry at ({i}, {j}, {k})")]
    SymmetryConflict { i: usize, j: usize, k: usize },
    #[error("ambient dimensions differ ({left} vs {right})")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector is not an idempotent")]
    NotIdempotent,
    #[error("eigenspace dimensions {dims:?} do not sum to {n}")]
    IncompleteSplit { dims: Vec<usize>, n: usize },
    #[error("dimension {n} exceeds the search bound {max}")]
    DimensionTooLarge { n: usize, max: usize },
    #[error("{name}: dimension {n} violates constraint {constraint}")]
    DimensionConstraint { name: String, n: usize, constraint: String },
    #[error("{name}: parameter {param}: {reason}")]
    ParameterDomain { name: String, param: String, reason: String },
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("unknown witness `{0}`")]
    UnknownWitness(String),
    #[error("matrix entries are not Laurent polynomials in either orientation")]
    NotLaurent,
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: String, found: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
