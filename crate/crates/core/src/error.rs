use thiserror::Error;

/// Every failure the analyzer can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("conductor mismatch: {left} vs {right}")]
    ConductorMismatch { left: u64, right: u64 },

    #[error("matrix is singular")]
    SingularMatrix,

    /// `guard` distinguishes a resource limit from an inadmissible input.
    #[error("unsupported size {size}: {reason}")]
    UnsupportedSize {
        size: usize,
        reason: String,
        guard: bool,
    },

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("polynomial degree {degree} exceeds truncation degree {target}")]
    DegreeExceedsTruncation { degree: usize, target: usize },

    #[error("ideal truncation too large: {cells} stored cells exceed the limit of {limit}")]
    TruncationTooLarge { cells: usize, limit: usize },

    #[error("orthogonality denominator vanishes; B(E) is not cosemisimple at this trace")]
    DegenerateDenominator,

    #[error("B(E) is not cosemisimple, so there is no Haar state")]
    NoHaarState,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error in `{field}`: {message}")]
    Parse { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Stable machine-readable code used in JSON error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ConductorMismatch { .. } => "conductor_mismatch",
            Error::SingularMatrix => "singular_matrix",
            Error::UnsupportedSize { .. } => "unsupported_size",
            Error::UnsupportedShape(_) => "unsupported_shape",
            Error::DegreeExceedsTruncation { .. } => "degree_exceeds_truncation",
            Error::TruncationTooLarge { .. } => "truncation_too_large",
            Error::DegenerateDenominator => "degenerate_denominator",
            Error::NoHaarState => "no_haar_state",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::Parse { .. } => "parse_error",
            Error::Io(_) => "io_error",
        }
    }

    /// Process exit code: 3 for internal size guards, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TruncationTooLarge { .. } => 3,
            Error::UnsupportedSize { guard: true, .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
