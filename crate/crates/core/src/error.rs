use thiserror::Error;

/// Failures raised by polynomial algebra, oracles and the recovery algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("interpolation points must be pairwise distinct (duplicate at index {0})")]
    DuplicatePoint(usize),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial needs at least one coefficient")]
    EmptyPolynomial,
    #[error("coefficient {0} is not finite")]
    NonFiniteCoefficient(usize),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("exact evaluation budget of {budget} exhausted")]
    ExactBudgetExhausted { budget: u64 },
    #[error("measurements are inconsistent with the degree bound: {0}")]
    DegreeMismatch(String),
    #[error("no candidate matches the exact evaluation (closest distance {distance:e})")]
    NoMatchingCandidate { distance: f64 },
    #[error("precision insufficient: candidate gap {gap:e} does not exceed twice the error bound {bound:e}")]
    PrecisionInsufficient { gap: f64, bound: f64 },
    #[error("expected {expected} samples, got {actual}")]
    SampleCountMismatch { expected: usize, actual: usize },
    #[error("radial coefficient x^{exponent} of row m={order} is {value:e}, expected zero")]
    SparsityViolation {
        order: usize,
        exponent: usize,
        value: f64,
    },
    #[error("tables inconsistent at (k={k}, m={m}): residual {residual:e}")]
    InconsistentTables { k: usize, m: usize, residual: f64 },
    #[error("|c| = {0} exceeds 2, no unit-difference decomposition exists")]
    MagnitudeTooLarge(f64),
    #[error("vanishing polynomial is not zero at probe {0}")]
    ProbeNotRoot(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
