use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("degree {degree} exceeds CERTIROOT_MAX_DEGREE = {max}")]
    DegreeLimit { degree: usize, max: usize },
    #[error(transparent)]
    Core(#[from] certiroot::Error),
}

/// Machine-readable failure report.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub format: u32,
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use certiroot::Error as E;
        match self {
            CliError::Parse(_) => "ParseError",
            CliError::Io { .. } => "IoError",
            CliError::DegreeLimit { .. } => "DegreeLimit",
            CliError::Core(e) => match e {
                E::DegreeUnresolved { .. } => "DegreeUnresolved",
                E::IdenticalPolynomials => "IdenticalPolynomials",
                E::SeparationTooSmall => "SeparationTooSmall",
                E::ThresholdNonPositive => "ThresholdNonPositive",
                E::DegreeTooLow { .. } => "DegreeTooLow",
                E::EndpointIsRoot(_) => "EndpointIsRoot",
                E::EmptyInterval => "EmptyInterval",
                E::ScheduleOverflow { .. } | E::InvalidSchedule(_) => "InvalidSchedule",
                E::SourceExhausted { .. } => "SourceExhausted",
                _ => "PreconditionViolated",
            },
        }
    }

    pub fn record(&self) -> ErrorRecord {
        ErrorRecord { format: 1, error: ErrorBody { kind: self.kind(), message: self.to_string() } }
    }
}
