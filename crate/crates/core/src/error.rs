use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in field")]
    DivisionByZero,
    #[error("dimension error: {0}")]
    Dimension(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("wrong form kind: expected {expected}, got {got}")]
    FormKind { expected: &'static str, got: &'static str },
    #[error("form is degenerate")]
    Degenerate,
    #[error("form not nondegenerate of either type")]
    NotNondegenerate,
    #[error("zero vector has no point type")]
    ZeroVector,
    #[error("impossible 2-space census")]
    ImpossibleCensus,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("not an involution class of this group")]
    NotInvolutionClass,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("modules belong to different groups: {0} vs {1}")]
    OwnerMismatch(String, String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error("unknown group name: {0}")]
    UnknownGroup(String),
    #[error("cache file error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
