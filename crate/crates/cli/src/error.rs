use thiserror::Error;

/// Failures of a command, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("singular evaluation: {0}")]
    Singular(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::BadInput(_) | CliError::Io { .. } => 2,
            CliError::Singular(_) => 3,
        }
    }

    pub fn bad(msg: impl Into<String>) -> Self {
        CliError::BadInput(msg.into())
    }
}

impl From<weingarten::Error> for CliError {
    fn from(e: weingarten::Error) -> Self {
        use weingarten::Error as E;
        match e {
            E::DegenerateJet { .. } | E::FormulaSingular { .. } | E::FocalPoint { .. } => {
                CliError::Singular(e.to_string())
            }
            E::Domain(_) | E::Immersion { .. } | E::InvalidTriple | E::NoFirstIntegral(_) => {
                CliError::BadInput(e.to_string())
            }
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
