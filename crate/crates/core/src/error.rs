use thiserror::Error;

/// Errors raised while building distributions or evaluating measures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("distribution needs at least 2 entries, got {len}")]
    TooShort { len: usize },

    #[error("non-finite entry at index {index}: {value}")]
    NonFinite { index: usize, value: f64 },

    #[error("inadmissible mass at index {index}: {value}")]
    NegativeMass { index: usize, value: f64 },

    #[error("values sum to {sum}, expected 1 within {tolerance:e}")]
    NotNormalized { sum: f64, tolerance: f64 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight normalizer is degenerate ({0})")]
    DegenerateWeights(String),

    #[error("multiplicative composition needs a nonzero scale e")]
    ZeroScale,

    #[error("result exceeds the floating range: {0}")]
    Overflow(String),

    #[error("value {value} is outside the range of the generator ({reason})")]
    OutOfRange { value: f64, reason: &'static str },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("constraint violated: {0}")]
    ConstraintViolation(String),

    #[error("unknown measure `{name}`{}", suggestion_suffix(.suggestions))]
    UnknownMeasure { name: String, suggestions: Vec<String> },

    #[error("missing input: {0}")]
    MissingInput(String),

    #[error("parse error: {0}")]
    Parse(String),
}

fn suggestion_suffix(suggestions: &[String]) -> String {
    if suggestions.is_empty() {
        String::new()
    } else {
        format!(" (did you mean: {})", suggestions.join(", "))
    }
}

impl Error {
    /// Stable short tag, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooShort { .. } => "TooShort",
            Error::NonFinite { .. } => "NonFinite",
            Error::NegativeMass { .. } => "NegativeMass",
            Error::NotNormalized { .. } => "NotNormalized",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::DegenerateWeights(_) => "DegenerateWeights",
            Error::ZeroScale => "ZeroScale",
            Error::Overflow(_) => "Overflow",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::Domain(_) => "DomainError",
            Error::ConstraintViolation(_) => "ConstraintViolation",
            Error::UnknownMeasure { .. } => "UnknownMeasure",
            Error::MissingInput(_) => "MissingInput",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
