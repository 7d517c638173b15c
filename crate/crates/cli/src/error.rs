use std::io;

use ribbon_core::Error as CoreError;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE: u8 = 3;
    pub const VERIFICATION: u8 = 4;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Json(_) => exit::USAGE,
            CliError::Verification(_) => exit::VERIFICATION,
            CliError::Io(_) => exit::INTERNAL,
            CliError::Core(e) => match e {
                CoreError::Budget { .. } => exit::RESOURCE,
                CoreError::NonIntegral(_) | CoreError::Internal(_) => exit::INTERNAL,
                _ => exit::USAGE,
            },
        }
    }

    /// A closed stdout is not worth reporting.
    pub fn is_broken_pipe(&self) -> bool {
        matches!(self, CliError::Io(e) if e.kind() == io::ErrorKind::BrokenPipe)
    }
}
