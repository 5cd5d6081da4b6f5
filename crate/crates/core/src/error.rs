use thiserror::Error;

/// Errors raised by graph, pivot and reduction operations.
///
/// Sets are reported by vertex name so a message can be read without the
/// graph it came from.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    InvalidVertex(String),

    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),

    #[error("graph has {0} vertices, at most {max} are supported", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("adjacency matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(String, String),

    #[error("pivot on {{{}}} is undefined: principal submatrix is singular", .0.join(","))]
    PivotUndefined(Vec<String>),

    #[error("dual pivot on {{{}}} is undefined: principal submatrix of G+I is singular", .0.join(","))]
    DualPivotUndefined(Vec<String>),

    #[error("{0}")]
    NotElementary(String),

    #[error("{what} needs at most {cap} vertices, got {n}")]
    OverCap {
        what: &'static str,
        cap: usize,
        n: usize,
    },

    #[error("set system does not contain the empty set, so it is not the system of a graph")]
    NotGraphic,

    #[error("ground sets differ")]
    GroundMismatch,

    #[error("rule {0} is not applicable")]
    RuleInapplicable(String),

    #[error("illegal string: letter `{0}` does not occur exactly twice")]
    IllegalString(String),

    #[error("letter `{0}` does not occur in the string")]
    UnknownLetter(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Whether the error reports a mathematically inapplicable operation, as
    /// opposed to malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            Error::PivotUndefined(_)
                | Error::DualPivotUndefined(_)
                | Error::NotElementary(_)
                | Error::RuleInapplicable(_)
                | Error::NotGraphic
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
