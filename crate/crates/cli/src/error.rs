//! CLI error type and its process exit codes.

use thiserror::Error;

/// Anything that can stop a command.
///
/// Exit codes: `0` success, `2` for parse and domain errors (including I/O),
/// `3` for structurally empty input.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed input: bad syntax, unknown fields, wrong shapes.
    #[error("{0}")]
    Parse(String),
    /// Well-formed input with out-of-range or inconsistent values.
    #[error("{0}")]
    Domain(String),
    /// The same id appears twice in one dataset.
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    /// Records of different payload kinds in one dataset.
    #[error("mixed payload kinds: {0}")]
    MixedKinds(String),
    /// A dataset with no records where at least one is needed.
    #[error("input contains no alternatives")]
    EmptyInput,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// The process exit code this error maps to.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::EmptyInput => 3,
            _ => 2,
        }
    }
}

impl From<neutrorank::EmptyInput> for CliError {
    fn from(_: neutrorank::EmptyInput) -> Self {
        CliError::EmptyInput
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Parse("x".into()).exit_code(), 2);
        assert_eq!(CliError::Domain("x".into()).exit_code(), 2);
        assert_eq!(CliError::DuplicateId("a".into()).exit_code(), 2);
        assert_eq!(CliError::MixedKinds("x".into()).exit_code(), 2);
        assert_eq!(CliError::EmptyInput.exit_code(), 3);
    }
}
