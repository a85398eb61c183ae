use thiserror::Error;

use crate::ring::VarSet;

/// Usage, precondition and I/O failures. Mathematical counterexamples are
/// not errors; they are reported through [`crate::Verdict`].
#[derive(Debug, Error)]
pub enum SwrError {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(VarSet, VarSet),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("variable `{0}` is not in the ring of the polynomial")]
    VariableNotInRing(String),

    #[error("power series precondition violated: {0}")]
    SeriesPrecondition(&'static str),

    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,

    #[error("division by zero")]
    DivisionByZero,

    #[error("expected a rational value, found a polynomial")]
    NotRational,

    #[error("expected a univariate polynomial in `{0}`")]
    NotUnivariate(String),

    #[error("zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration guard exceeded: n = {n} > {guard}")]
    GuardExceeded { n: usize, guard: usize },

    #[error("continued fraction horizon {have} is too short for order {need}")]
    HorizonTooShort { have: usize, need: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("insufficient terms: {0}")]
    InsufficientTerms(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = SwrError> = std::result::Result<T, E>;
