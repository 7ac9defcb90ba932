use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors produced anywhere in the algebra, the probability layer, the
/// checker or the expression language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different sample spaces")]
    SpaceMismatch,
    #[error("a sample space needs at least one atom")]
    EmptySpace,
    #[error("{what} supports at most {max} atoms, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("bad weight `{0}`")]
    BadWeight(String),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("total weight is zero")]
    ZeroTotalWeight,
    #[error("undefined: condition has probability 0")]
    ZeroCondition,
    #[error("events are not disjoint")]
    NotDisjoint,
    #[error("parts overlap, so they do not form a partition")]
    NotAPartition,
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("event definition must be unconditional, got condition {0}")]
    ConditionalEvent(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        match self {
            err @ Error::AtLine { .. } => err,
            Error::Parse(p) => Error::Parse(p),
            other => Error::AtLine {
                line,
                source: Box::new(other),
            },
        }
    }

    /// The underlying error with any line annotation stripped.
    pub fn root(&self) -> &Error {
        match self {
            Error::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    /// Line number attached by the space-file reader, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            Error::AtLine { line, .. } => Some(*line),
            Error::Parse(p) => Some(p.line),
            _ => None,
        }
    }
}

/// A syntax error with a 1-based position and the set of tokens that would
/// have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: expected ", self.line, self.column)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        write!(f, ", found {}", self.found)
    }
}

impl std::error::Error for ParseError {}
