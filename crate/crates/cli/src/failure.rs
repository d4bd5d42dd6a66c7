use std::fmt;
use std::path::Path;

use serde::Serialize;

/// Process exit codes.
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    Validation,
    Io,
    Degenerate,
}

impl FailureKind {
    pub fn exit_code(self) -> i32 {
        match self {
            FailureKind::Validation => EXIT_VALIDATION,
            FailureKind::Io => EXIT_IO,
            FailureKind::Degenerate => EXIT_DEGENERATE,
        }
    }
}

/// A subcommand failure, reported on stderr as one JSON object.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub kind: FailureKind,
    pub exit_code: i32,
    pub message: String,
}

impl Failure {
    pub fn new(kind: FailureKind, message: impl Into<String>) -> Self {
        Self {
            kind,
            exit_code: kind.exit_code(),
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self::new(FailureKind::Validation, message)
    }

    pub fn degenerate(message: impl Into<String>) -> Self {
        Self::new(FailureKind::Degenerate, message)
    }

    pub fn io(path: &Path, err: impl fmt::Display) -> Self {
        Self::new(FailureKind::Io, format!("{}: {err}", path.display()))
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "error": self }).to_string()
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<ecg_core::Error> for Failure {
    fn from(e: ecg_core::Error) -> Self {
        let kind = if e.is_validation() {
            FailureKind::Validation
        } else if e.is_io() {
            FailureKind::Io
        } else {
            FailureKind::Degenerate
        };
        Self::new(kind, e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self::new(FailureKind::Io, e.to_string())
    }
}

pub type CliResult<T> = Result<T, Failure>;
