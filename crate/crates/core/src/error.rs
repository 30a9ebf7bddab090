use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("polynomial degree too low (need at least {required})")]
    DegreeTooLow { required: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("leading coefficient {leading} is within 2γ of zero; degree cannot be resolved")]
    DegreeUnresolved { leading: String },
    #[error("degree {degree} exceeds the maximum of {max}")]
    DegreeOverflow { degree: usize, max: usize },
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(String),
    #[error("empty or reversed interval")]
    EmptyInterval,
    #[error("threshold must be positive")]
    ThresholdNonPositive,
    #[error("polynomials are identical")]
    IdenticalPolynomials,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("2^-r must be below half the root separation")]
    SeparationTooSmall,
    #[error("stage length exceeds the bit budget of {budget}")]
    ScheduleOverflow { budget: u64 },
    #[error("invalid stage schedule: {0}")]
    InvalidSchedule(String),
    #[error("bit source exhausted at index {index}")]
    SourceExhausted { index: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("inconsistent coefficient bit {bit} of a_{coefficient}")]
    InconsistentBits { coefficient: usize, bit: usize },
    #[error("vector too long for exhaustive enumeration ({len} > {max})")]
    TooLong { len: usize, max: usize },
    #[error("no sign change on the bracket")]
    NoSignChange,
}
