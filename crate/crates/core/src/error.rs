use thiserror::Error;

/// Errors raised by the toolkit. Every variant is a domain error; flag and
/// parse problems are handled by the CLI layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series whose constant term {0:e} is not a unit")]
    DivisionByNonUnit(f64),
    #[error("real power requires constant term exactly 1")]
    NonUnitConstant,
    #[error("invalid atoms: {0}")]
    InvalidAtoms(String),
    #[error("invalid lemma point: {0}")]
    InvalidLemmaPoint(String),
    #[error("p1 = {0} is at the boundary value 2; moments are forced to (2, 2, 2)")]
    DegenerateP1(f64),
    #[error("moments not normalized: p1 = {re} + {im}i must be real and nonnegative")]
    NotNormalized { re: f64, im: f64 },
    #[error("inadmissible moments: {0}")]
    InadmissibleMoments(String),
    #[error("alpha = {0} is outside [0, 1)")]
    InvalidAlpha(f64),
    #[error("radius = {0} is outside (0, 1)")]
    InvalidRadius(f64),
    #[error("coefficient vector must start with a1 = 1 and have at least one entry")]
    InvalidCoefficients,
    #[error("need coefficients through a_{needed}, have only {available}")]
    InsufficientCoefficients { needed: usize, available: usize },
    #[error("Hankel order q = {0} is not supported (1 <= q <= 6)")]
    UnsupportedOrder(usize),
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
