use thiserror::Error;

/// Syntax error carrying the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }

    pub(crate) fn shifted(mut self, by: usize) -> Self {
        self.offset += by;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown indeterminate `{0}` in substitution")]
    UnknownIndeterminate(String),
    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("generator `{0}` is not in algebra `{1}`")]
    UnknownGenerator(String, String),
    #[error("index {index} is not in the lattice of family `{family}`")]
    LatticeMismatch { family: String, index: String },
    #[error("elements belong to different presentations (`{0}` vs `{1}`)")]
    MixedPresentations(String, String),
    #[error("unknown module `{0}`")]
    UnknownModule(String),
    #[error("module `{module}` cannot be built over algebra `{algebra}`: {reason}")]
    AlgebraMismatch {
        module: String,
        algebra: String,
        reason: String,
    },
    #[error("module `{0}` fails its axiom gate: {1}")]
    AxiomGate(String, String),
    #[error("malformed module spec: {0}")]
    MalformedSpec(String),
    #[error("sign pinning failed: {0}")]
    Pinning(String),
    #[error("window error: {0}")]
    Window(String),
    #[error("grassmann: {0}")]
    Grassmann(String),
    #[error("degree {degree} exceeds ideal cap {cap}")]
    DegreeOverCap { degree: usize, cap: usize },
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
