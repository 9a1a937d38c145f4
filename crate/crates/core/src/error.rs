use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("words must be non-empty")]
    EmptyWord,
    #[error("invalid generator name `{0}` (expected [a-z][a-z0-9]*)")]
    InvalidGeneratorName(String),
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("bar is undefined on degree-one terms")]
    DegreeOneSupport,
    #[error("key is not indexed by the coordinatizer")]
    UnindexedKey,
    #[error("vector dimension {found} does not match ambient dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspaces live in different coordinate systems")]
    CoordinatizerMismatch,
    #[error("element is not Lie (p(f) != -f)")]
    NotLie,
    #[error("Lie element has a non-zero coefficient on a word with equal last letters")]
    CorruptLie,
    #[error("multidegree total {found} is below the minimum {min}")]
    DegreeTooSmall { min: u32, found: u32 },
    #[error("argument shape does not match the rewrite formula: {0}")]
    ShapeMismatch(&'static str),
    #[error("inputs b and c must be Lie")]
    NotLieInput,
    #[error("tree leaf x{0} has no assigned value")]
    UnassignedLeaf(u32),
    #[error("certificate check failed: {0}")]
    CertificateViolation(String),
    #[error("polynomials carry different degree caps ({0} vs {1})")]
    CapMismatch(usize, usize),
    #[error("degree cap {0} admits no truncation-free trial")]
    CapTooSmall(usize),
    #[error("ideal generators must be homogeneous and Lie")]
    BadGenerator,
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
