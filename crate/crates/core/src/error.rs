use thiserror::Error;

use crate::algebra::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed request: bad arguments, mismatched widths or arities.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("algebra `{name}` failed validation with {} violation(s)", report.violations.len())]
    Validation {
        name: String,
        report: ValidationReport,
    },

    /// The input is outside the class an operation is defined on.
    #[error("scope error: {0}")]
    Scope(String),

    /// A documented size cap was hit before any work started.
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Error {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Parse { .. } | Error::Io(_) | Error::Json(_) => 2,
            Error::Validation { .. } | Error::Scope(_) | Error::LimitExceeded(_) => 3,
            Error::BudgetExceeded(_) => 4,
        }
    }
}
