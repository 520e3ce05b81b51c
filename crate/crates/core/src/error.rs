use thiserror::Error;

/// Errors raised by the kernel.
///
/// Parse failures are kept apart from domain failures so that front ends can
/// tell malformed input from well-formed input the geometry rejects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix must have at least one row and one column, each row with the same length")]
    MalformedMatrix,

    #[error("dimension {n} exceeds the permanent bound {max}")]
    DimensionTooLarge { n: usize, max: usize },

    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("chart index {0} is not one of 1, 2, 3")]
    InvalidChart(u8),

    #[error("polynomial has no finite terms")]
    EmptyPolynomial,

    #[error("projective point cannot have every coordinate equal to -inf")]
    AllNegInf,

    #[error("boundary point {0} where an interior point is required")]
    BoundaryPoint(String),

    #[error("points must be pairwise distinct")]
    RepeatedPoints,

    #[error("lines must be distinct")]
    EqualLines,

    #[error("line coefficients must be finite")]
    NonFiniteLine,

    #[error("expected an n x (n+1) coefficient matrix, got {rows}x{cols}")]
    ShapeMismatch { rows: usize, cols: usize },

    #[error("coefficient matrix entries must be finite")]
    NonFiniteEntry,

    #[error("points are tropically collinear")]
    Collinear,

    #[error("triangle is {0}, operation needs a good triangle")]
    NotGood(String),

    #[error("invalid hexagon parameters: {0}")]
    InvalidParams(String),

    #[error("span needs at least {min} generators, got {got}")]
    TooFewGenerators { min: usize, got: usize },

    #[error("at most {max} points supported, got {got}")]
    TooManyPoints { max: usize, got: usize },

    #[error("tiling parameters must satisfy l1=l4, l2=l5, l3=l6")]
    NonSymmetricParams,

    #[error("region must satisfy x_min < x_max and y_min < y_max")]
    EmptyRegion,

    #[error("malformed tiling cell {index}: {reason}")]
    MalformedCell { index: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, TropError>;
