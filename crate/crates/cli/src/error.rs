use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Spec(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed spec: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(Box<lieq_core::Error>),
}

impl From<lieq_core::Error> for CliError {
    fn from(e: lieq_core::Error) -> CliError {
        CliError::Core(Box::new(e))
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub const EXIT_SPEC: u8 = 2;
pub const EXIT_NOT_CLOSED: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if matches!(**e, lieq_core::Error::NotIntervalClosed { .. }) => {
                EXIT_NOT_CLOSED
            }
            _ => EXIT_SPEC,
        }
    }
}
