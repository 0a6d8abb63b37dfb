use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid origami: {0}")]
    InvalidOrigami(String),
    #[error("invalid curve: {0}")]
    InvalidCurve(String),
    #[error("curves are not in general position: {0}")]
    NotGeneralPosition(String),
    #[error("curves do not intersect")]
    Disjoint,
    #[error("pair is not coherent (geometric {geometric}, algebraic {algebraic})")]
    NotCoherent { geometric: usize, algebraic: i64 },
    #[error("pair does not fill the surface")]
    NotFilling,
    #[error("construction failed: {0}")]
    Construction(String),
    #[error("chord budget exceeded: {chords} chords > {budget}")]
    ChordBudget { chords: usize, budget: usize },
    #[error("step cap of {0} exceeded")]
    StepCap(usize),
    #[error("edge path failed verification: {0}")]
    Unverified(String),
    #[error("no candidate curve: {0}")]
    NoCandidate(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("malformed input: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Input that could not be read or parsed, as opposed to a mathematical
    /// precondition that failed.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Io { .. } | Error::Format(_) | Error::Json(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
