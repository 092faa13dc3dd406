use serde::Serialize;

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a mathematical check failed.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit code for usage, input and capacity errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] coorbit_core::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

/// Machine-readable error document written on failure.
#[derive(Debug, Serialize)]
pub struct ErrorDocument {
    pub error: ErrorBody,
}

#[derive(Debug, Serialize)]
pub struct ErrorBody {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        use coorbit_core::Error as E;
        match self {
            CliError::Usage(_) => "usage",
            CliError::Json(_) => "json",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                E::VariableMismatch => "variable-mismatch",
                E::Shape(_) => "shape",
                E::Singular => "singular",
                E::Domain(_) => "domain",
                E::Capacity(_) => "capacity",
                E::Construction(_) => "construction",
                E::Input(_) => "input",
            },
        }
    }

    /// A failed construction is a mathematical failure; everything else is a
    /// usage or capacity problem.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(coorbit_core::Error::Construction(_)) => EXIT_CHECK_FAILED,
            _ => EXIT_USAGE,
        }
    }

    pub fn document(&self) -> ErrorDocument {
        ErrorDocument { error: ErrorBody { kind: self.kind(), message: self.to_string() } }
    }
}
