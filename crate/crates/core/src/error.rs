use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("missing comultiplication {0}")]
    MissingComultiplication(String),
    #[error("{0} is not a group")]
    NotAGroup(String),
    #[error("antipode S_{{{0}}} is singular")]
    SingularAntipode(String),
    #[error("invalid ordinary Hopf algebra: {0}")]
    InvalidOrdinaryHopf(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("action axiom failure: {0}")]
    ActionAxiomFailure(String),
    #[error("subset not closed under the action: {0}")]
    NotClosed(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("antipodes missing")]
    AntipodeMissing,
    #[error("R/Q matrices missing")]
    RMatrixMissing,
    #[error("suite {suite:?} is not supported for {kind} files")]
    UnsupportedSuite { suite: String, kind: String },
    #[error("characteristic conflict: {0}")]
    CharacteristicConflict(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
