use alloc::string::String;

/// Every failure the numerical core can report.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("test function returned a non-finite value at x = {x}")]
    NonFiniteSample { x: f64 },
    #[error("iterative evaluation stalled before tolerance (estimate {estimate}, error {error})")]
    ToleranceNotMet { estimate: f64, error: f64 },
    #[error("tridiagonal eigensolver did not converge after {iterations} sweeps")]
    EigensolveFailure { iterations: usize },
    #[error("eigenvalue {value} lies outside the support of the ensemble")]
    OutOfSupport { value: f64 },
    #[error("moment matrix is ill-conditioned (estimate {estimate:e})")]
    IllConditioned { estimate: f64 },
    #[error("n = {n} exceeds the exact-oracle limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("variance functional K[f] = {k} is not positive")]
    DegenerateVariance { k: f64 },
    #[error("eigenvalue {value} outside [-1, 1] and no tail evaluator was supplied")]
    MissingTail { value: f64 },
    #[error("point is within {distance} of the cut; minimum is {minimum}")]
    TooCloseToCut { distance: f64, minimum: f64 },
    #[error("point lies on a branch cut")]
    BranchViolation,
    #[error("point lies on the jump contour")]
    OnContour,
    #[error("point is outside the edge neighborhood")]
    WrongNeighborhood,
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = core::result::Result<T, Error>;
