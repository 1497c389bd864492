use thiserror::Error;

use crate::diagram::Violation;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinkageError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is singular")]
    Singular,

    #[error("unknown diagram name {0:?}")]
    UnknownDiagram(String),

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("invalid diagram: {}", join_violations(.0))]
    Invalid(Vec<Violation>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("diagram has no D5(a1) or D4 pattern on a1, a2, a3, b1")]
    PatternAbsent,

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An oracle or invariant check disagreed with the computed result.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported root system: {0}")]
    UnsupportedRootSystem(String),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T, E = LinkageError> = std::result::Result<T, E>;
