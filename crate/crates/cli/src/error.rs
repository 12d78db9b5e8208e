use thiserror::Error;

/// Failures of a CLI run, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] flagstab_core::Error),
}

impl CliError {
    /// 1 for malformed input or violated preconditions, 3 when an internal
    /// search limit was hit or an internal cross-check failed.
    pub fn exit_code(&self) -> i32 {
        use flagstab_core::Error as E;
        match self {
            CliError::Core(E::InternalLimit(_) | E::CrossCheck(_)) => 3,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        use flagstab_core::Error as E;
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Input(_) => "input",
            CliError::Io(_) => "io",
            CliError::Core(E::InternalLimit(_)) => "internal-limit",
            CliError::Core(E::CrossCheck(_)) => "cross-check",
            CliError::Core(_) => "precondition",
        }
    }
}
