use fi_calc_core::Error as CoreError;

/// Failures of a command, split by exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flags, unreadable files, guard violations: exit status 2.
    #[error("{0}")]
    Usage(String),
    /// The computation itself refused or failed: exit status 1.
    #[error("{op}: {source}")]
    Domain { op: &'static str, source: CoreError },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain { .. } => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub trait Context<T> {
    fn during(self, op: &'static str) -> CliResult<T>;
}

impl<T> Context<T> for fi_calc_core::Result<T> {
    fn during(self, op: &'static str) -> CliResult<T> {
        self.map_err(|source| CliError::Domain { op, source })
    }
}
