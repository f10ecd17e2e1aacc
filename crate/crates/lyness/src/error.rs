use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("point ({x}, {y}) is outside the open positive quadrant")]
    OutsideDomain { x: f64, y: f64 },

    #[error("exact coordinate {value} must be strictly positive")]
    NonpositiveExact { value: String },

    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("alpha must be a finite real with alpha >= 0, got {alpha}")]
    InvalidAlpha { alpha: f64 },

    #[error("level v = {v} is at or below the minimum level v_alpha = {v_min}")]
    BelowMinimumLevel { v: f64, v_min: f64 },

    #[error("exact orbit exceeded the {cap}-bit size cap at step {step}")]
    ExactOverflow { step: usize, cap: u64 },

    #[error("rotation estimation needs at least {min} iterations, got {got}")]
    TooFewIterations { got: u64, min: u64 },

    #[error("an iterate coincides with the fixed point; the orbit is numerically corrupt")]
    HitFixedPoint,

    #[error("rotation bounds are stated only for alpha outside {{0, 1}}, got {alpha}")]
    ExcludedAlpha { alpha: f64 },

    #[error("scan grid must be strictly increasing")]
    UnorderedGrid,

    #[error("unsupported special period {period}; closed-form levels exist for 9 and 11")]
    UnsupportedPeriod { period: u32 },

    #[error("special level is invalid: v_bar = {v_bar} does not exceed v_alpha = {v_min}")]
    InvalidSpecialLevel { v_bar: f64, v_min: f64 },

    #[error("frieze seed must have length >= 3 and start and end with 1")]
    SeedShape { len: usize },

    #[error("seed entries must be strictly positive")]
    SeedNotPositive { index: usize },

    #[error("seed is not realizable: entry ({r}, {s}) = {value} is not positive")]
    NotRealizable { r: i64, s: i64, value: String },

    #[error("five-term relation {index} (u_r * u_r+2 = 1 + u_r+1) does not hold")]
    RelationViolation { index: usize },

    #[error("malformed staggered grid: {reason}")]
    MalformedGrid { reason: String },

    #[error("root finding did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("could not parse {input:?} as a rational number")]
    ParseRational { input: String },
}

pub type Result<T> = std::result::Result<T, Error>;
