use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unsupported family, rank, or malformed parameters.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A box set that should be an order ideal is not.
    #[error("shape error: {0}")]
    Shape(String),
    /// A slide was requested at a box that is not a valid start.
    #[error("slide error: {0}")]
    Slide(String),
    /// A shape chain does not grow by exactly one box per step.
    #[error("chain error: {0}")]
    Chain(String),
    /// Two tableaux do not fit together (one shape does not extend the other).
    #[error("extension error: {0}")]
    Extension(String),
    /// Containments required by a local growth rule are violated.
    #[error("local rule error: {0}")]
    Rule(String),
    #[error("no basic shape: {0}")]
    NoBasicShape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("poset has {boxes} boxes, above the cap of {cap}")]
    SizeCap { boxes: usize, cap: usize },
    #[error("tableau error: {0}")]
    Tableau(String),
    #[error("json error: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
