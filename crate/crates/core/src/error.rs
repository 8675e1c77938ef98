use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation requires a nonzero series")]
    ZeroSeries,
    #[error("weight vector has a negative entry at index {0}")]
    NegativeEntry(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("tropical polynomial has no monomials")]
    EmptyTropicalPolynomial,
    #[error("hypersurface fans need constant (order zero) tropical coefficients")]
    NonConstantCoefficients,
    #[error("cone is the origin only")]
    OriginOnly,
    #[error("not a fan: cones {0} and {1} meet outside a common face")]
    NotAFan(usize, usize),
    #[error("input is not bivariate")]
    NotBivariate,
    #[error("polynomial input required; truncated series belong to the prevariety path")]
    TruncatedInput,
    #[error("no generators given")]
    NoGenerators,
    #[error("all generators are zero")]
    ZeroIdeal,
    #[error("fan traversal incomplete near weight {0}")]
    TraversalIncomplete(String),
    #[error("failed to lift monomial for cone {0}")]
    LiftFailed(usize),
    #[error("standard basis did not stabilise below degree bound {0}")]
    PrecisionExhausted(u32),
    #[error("parse error: {0}")]
    Parse(String),
}
