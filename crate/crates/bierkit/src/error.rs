use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed decimal literal {input:?}: unexpected character at byte {position}")]
    ParseDecimal { input: String, position: usize },
    #[error("malformed rational literal {0:?}")]
    ParseRational(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("rank deficiency: {0}")]
    RankDeficient(String),
    #[error("matrix shape error: {0}")]
    Shape(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("degenerate complex: {0}")]
    DegenerateComplex(String),
    #[error("polarity error: {0}")]
    Polarity(String),
    #[error("ambient space mismatch: {0}")]
    AmbientMismatch(String),
    #[error("unsupported realization: {0}")]
    UnsupportedRealization(String),
    #[error("pseudomanifold violation: {0}")]
    Pseudomanifold(String),
    #[error("degenerate wall: {0}")]
    DegenerateWall(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
