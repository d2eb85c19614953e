use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Structural(String),
    #[error("invalid pointed matched circle: surgery yields {0} circles")]
    InvalidCircle(usize),
    #[error("chord collision: {0}")]
    ChordCollision(String),
    #[error("mismatched ambient size: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("inhomogeneous element: {0} has grading {1}, {2} has grading {3}")]
    Inhomogeneous(String, u8, String, u8),
    #[error("convention mismatch: {0}")]
    Convention(String),
    #[error("orderings are over different curve sets: {0}")]
    OrderingMismatch(String),
    #[error("determinant is zero; only a relative grading is available")]
    NotRationalHomologySphere,
    #[error("norm cap {cap} too small: the search needs squared norm up to {required}")]
    NormCap { cap: u64, required: u64 },
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("not Lagrangian: {0}")]
    NotLagrangian(String),
    #[error("gluing: {0}")]
    Gluing(String),
    #[error("boundedness: {0}")]
    Unbounded(String),
    #[error("no multiplication domain: {0}")]
    NoDomain(String),
    #[error("index is not an integer: {0}")]
    NonIntegralIndex(String),
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("schema: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
