use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A failed algebraic identity, naming the first offending index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Which identity failed, e.g. `associativity` or `module relation`.
    pub identity: String,
    pub indices: Vec<usize>,
    /// Human-readable description of the index tuple, using basis labels.
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}: left side {} but right side {}", self.identity, self.location, self.lhs, self.rhs)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("validation violation: {0}")]
    Violation(Violation),
    #[error("not split over the ground field: {0}")]
    NotSplit(String),
    #[error("needs supplied idempotents: {0}")]
    NeedsSuppliedData(String),
    #[error("not a Frobenius form: {0}")]
    NotFrobenius(String),
    #[error("idempotent search gave up after {retries} retries (seed {seed})")]
    RetryBudget { retries: usize, seed: u64 },
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command line tool.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Input(_) | Error::Violation(_) | Error::NotFrobenius(_) | Error::Io(_) => 2,
            Error::NotSplit(_) | Error::NeedsSuppliedData(_) | Error::RetryBudget { .. } => 3,
            Error::Internal(_) => 1,
        }
    }
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Violation(v)
    }
}
