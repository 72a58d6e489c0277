use thiserror::Error;

/// Errors produced by construction, search and parsing routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("loop edge on vertex `{0}`")]
    Loop(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex label {0:?}: labels must be non-empty and free of whitespace and []{{}},:*+\"")]
    InvalidLabel(String),
    #[error("star-with-tail parameters must satisfy p >= 1 and q >= 1 (got p = {p}, q = {q})")]
    GammaParameters { p: u64, q: u64 },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("permutation moves point {0} outside the declared support")]
    OutsideSupport(usize),
    #[error("{what} of size {size} exceeds the search budget of {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{what} of size {size} exceeds the brute-force oracle limit of {limit}")]
    OracleLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("map is not total on the source vertices: `{0}` has no image")]
    PartialMap(String),
    #[error("map is not injective: {0} and {1} have the same image")]
    NotInjective(String, String),
    #[error("map is not a graph homomorphism: edge {{{0},{1}}} is not sent to an edge")]
    NotHomomorphism(String, String),
    #[error("map is not a graph automorphism")]
    NotAutomorphism,
    #[error("word {0} is not in the domain")]
    NotInDomain(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("maximum word length must be at least {min} (got {got})")]
    MaxLength { min: usize, got: usize },
    #[error("ratio must be positive (got {0})")]
    NonPositiveRatio(String),
    #[error("scale {scale} gives m = {m}, n = {n}, below the required bounds m >= {min_m}, n >= {min_n}")]
    ScaleTooSmall {
        scale: String,
        m: String,
        n: String,
        min_m: u32,
        min_n: u32,
    },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
