use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The variants are grouped so a front end can map them to exit codes:
/// [`Error::Parse`] is a syntax problem, [`Error::Internal`] is a bug, and the
/// rest are semantic errors about otherwise well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Well-formed but invalid input, such as a letter outside the alphabet.
    #[error("invalid input: {0}")]
    Input(String),

    /// A configured cap was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An operation that needs an unambiguous automaton got an ambiguous one.
    #[error("ambiguous automaton or language, witness {witness}")]
    Ambiguous { witness: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// The energy solver ran out of budget without reaching a verdict.
    #[error("unknown(bound={bound})")]
    Undecided { bound: u32 },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line, col, msg: msg.into() }
    }

    pub(crate) fn input(msg: impl Into<String>) -> Error {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Error {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
