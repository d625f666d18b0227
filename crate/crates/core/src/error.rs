use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: classes on {left} and {right} blown-up points")]
    DimensionMismatch { left: usize, right: usize },

    #[error("invalid divisor class: {0}")]
    InvalidClass(String),

    #[error("cannot parse divisor class {input:?}: {reason}")]
    ParseClass { input: String, reason: String },

    #[error("invalid curve type (g, d) = ({genus}, {degree}): {reason}")]
    InvalidCurve {
        genus: i64,
        degree: i64,
        reason: &'static str,
    },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("formula outside its integral domain: {0}")]
    FormulaDomain(String),

    #[error("negative residual degree {0}")]
    Degree(i64),

    #[error("infeasible linkage: residual genus {0} is below -1")]
    InfeasibleLinkage(i64),

    #[error("parity violation: {0}")]
    Parity(String),

    #[error("inconsistent genera: union secancy would be {0}")]
    InconsistentGenera(i64),

    #[error("invalid bidegree ({a}, {b}) on a smooth quadric")]
    InvalidBidegree { a: i64, b: i64 },

    #[error("invalid quadric-cone class (a, e) = ({a}, {e})")]
    InvalidConeClass { a: i64, e: i64 },

    #[error("curve lies on a quadric: -2K - C is effective on the cubic surface")]
    QuadricContainment,

    #[error(
        "class does not map to a smooth curve: sum of multiplicities {sum} != 3k - 1 = {expected}"
    )]
    NonSmoothImage { sum: i64, expected: i64 },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("invalid point configuration: {0}")]
    InvalidPoints(String),
}
