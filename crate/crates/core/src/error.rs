use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown generator '{name}' at position {position}")]
    UnknownGenerator { position: usize, name: String },
    #[error("invalid generator name '{0}'")]
    InvalidGeneratorName(String),
    #[error("duplicate generator name '{0}'")]
    DuplicateGenerator(String),
    #[error("too many generators: {0} (limit {limit})", limit = crate::word::MAX_GENERATORS)]
    TooManyGenerators(usize),
}

impl ParseError {
    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no unit normal form")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("evaluation point must be 1 or -1, got {0}")]
    EvaluationPoint(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("abelianization has free rank {0}, expected 1")]
    FreeRank(usize),
    #[error("weights {0:?} do not define a homomorphism onto <t>")]
    InvalidWeights(Vec<i64>),
    #[error("first elementary ideal is zero; no Alexander polynomial")]
    ElementaryIdealZero,
    #[error("internal error: fundamental identity fails on relator {0}")]
    IdentityViolation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("coset bound must be at least 1")]
    ZeroBound,
    #[error("word uses generator {0} outside the presentation")]
    GeneratorOutOfRange(usize),
    #[error("internal error: closed coset table failed relator replay")]
    ReplayFailed,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid ribbon data: {0}")]
    InvalidKnot(String),
    #[error("first homology of the complement is {0}, not Z")]
    HomologyNotZ(String),
    #[error("generator {0} is not a designated meridian")]
    NotAMeridian(String),
    #[error("{variant} blow-down needs {needed} 1-handle(s) and a 3-handle to cancel, counts are {counts}")]
    InsufficientHandles { variant: String, needed: u64, counts: String },
}

/// Any failure of the library, for callers running whole pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Fox(#[from] FoxError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

impl Error {
    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Fox(FoxError::IdentityViolation(_)) | Error::Coset(CosetError::ReplayFailed))
    }
}
