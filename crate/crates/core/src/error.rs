use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("diagram is unreduced (nugatory crossing at position {0})")]
    UnreducedDiagram(usize),

    #[error("no checkerboard coloring yields a negative definite Goeritz form for {0}")]
    NotNegativeDefinite(String),

    #[error("Goeritz determinant of {0} is even; input is not a knot diagram")]
    EvenDeterminant(String),

    #[error("singular matrix")]
    SingularMatrix,

    #[error("correction term enumeration missed {missing} of {expected} labels")]
    IncompleteCoverage { expected: u64, missing: u64 },

    #[error("corrupt cache entry: {0}")]
    CorruptCache(String),

    #[error("cache version mismatch: found {found}, expected {expected}")]
    VersionMismatch { found: String, expected: String },

    #[error("knot list: {0}")]
    KnotList(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
