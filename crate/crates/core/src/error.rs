use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero undefined")]
    ZeroValuation,

    #[error("{0}: argument must be nonzero")]
    ZeroInput(&'static str),

    #[error("division by zero")]
    DivisionByZero,

    #[error("place set incompatible with coefficient field: {0}")]
    PlaceSetIncompatible(String),

    #[error("invalid place: {0}")]
    InvalidPlace(String),

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("subsum enumeration infeasible: {terms} terms exceeds the cap of {cap}")]
    SubsumInfeasible { terms: usize, cap: usize },

    #[error("parse error at position {pos}: {message}")]
    Parse { pos: usize, message: String },

    #[error("malformed fan: {0}")]
    MalformedFan(String),

    #[error("cone {0} is not a maximal cone of the fan")]
    NonMaximalCone(usize),

    #[error("ray {0} is not a ray of the fan")]
    RayNotInFan(String),

    #[error("Weil function undefined on support")]
    OnSupport,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("inputs do not sum to 1")]
    SumNotOne,

    #[error("invalid orbifold coefficient {0}: expected 1 - 1/m with m >= 2, or 1")]
    InvalidEpsilon(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            message: message.into(),
        }
    }
}
