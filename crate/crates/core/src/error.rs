use thiserror::Error;

/// Errors raised by the kernel and the invariant computations built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division has a nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("resultant input has degree 0 in the eliminated variable on both sides")]
    DegenerateInput,
    #[error("cannot solve for x: {0}")]
    NotSolvable(String),
    #[error("truncation order {0} too small to stabilize the result")]
    TruncationTooSmall(u32),

    #[error("k = {k} exceeds sigma({m}) + 1 = {max}")]
    KTooLarge { m: u64, k: usize, max: usize },
    #[error("k = {k} is below the minimum of 2 for multiplicity {m}")]
    KTooSmall { m: u64, k: usize },
    #[error("multiplicity {0} is prime, so only k = 2 is possible")]
    PrimeNeedsK2(u64),

    #[error("branch is not primitive: {0}")]
    NotPrimitive(String),
    #[error("invalid branch: {0}")]
    InvalidBranch(String),
    #[error("the two curves share a branch (intersection number is infinite)")]
    SharedBranch,

    #[error("singularity is not isolated (resultant vanishes identically)")]
    NonIsolated,
    #[error("shear sweep did not stabilize after {0} attempts")]
    NoConvergence(u32),
    #[error("quasihomogeneous Milnor formula gives a non-integer value")]
    NonInteger,

    #[error("invalid map germ: {0}")]
    InvalidGerm(String),
    #[error("double point resultant vanishes identically (germ is not generically one-to-one)")]
    IdenticallyZero,
    #[error("no slice formula covers this case: {0}")]
    UnhandledCase(String),
    #[error("ramification partials share a common factor: infinitely many cross-caps")]
    InfiniteCrossCaps,
    #[error("germ is not quasihomogeneous")]
    NotQuasihomogeneous,
    #[error("counterexample hypothesis fails: {0}")]
    HypothesisFailed(String),
    #[error("invalid unfolding: {0}")]
    InvalidUnfolding(String),
}

/// Broad classes of failure, used for exit codes and machine-readable reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Precondition,
    Unhandled,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::UnhandledCase(_) => ErrorClass::Unhandled,
            Error::NoConvergence(_) | Error::TruncationTooSmall(_) => ErrorClass::Internal,
            _ => ErrorClass::Precondition,
        }
    }

    /// Stable identifier for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotDivisible => "NotDivisible",
            Error::DivisionByZero => "DivisionByZero",
            Error::DegenerateInput => "DegenerateInput",
            Error::NotSolvable(_) => "NotSolvable",
            Error::TruncationTooSmall(_) => "TruncationTooSmall",
            Error::KTooLarge { .. } => "KTooLarge",
            Error::KTooSmall { .. } => "KTooSmall",
            Error::PrimeNeedsK2(_) => "PrimeNeedsK2",
            Error::NotPrimitive(_) => "NotPrimitive",
            Error::InvalidBranch(_) => "InvalidBranch",
            Error::SharedBranch => "SharedBranch",
            Error::NonIsolated => "NonIsolated",
            Error::NoConvergence(_) => "NoConvergence",
            Error::NonInteger => "NonInteger",
            Error::InvalidGerm(_) => "InvalidGerm",
            Error::IdenticallyZero => "IdenticallyZero",
            Error::UnhandledCase(_) => "UnhandledCase",
            Error::InfiniteCrossCaps => "InfiniteCrossCaps",
            Error::NotQuasihomogeneous => "NotQuasihomogeneous",
            Error::HypothesisFailed(_) => "HypothesisFailed",
            Error::InvalidUnfolding(_) => "InvalidUnfolding",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
