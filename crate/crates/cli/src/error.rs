use thiserror::Error;

/// Errors surfaced by the command-line layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{0}")]
    Core(#[from] ideal_interp_core::Error),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }

    /// Stable identifier printed with every diagnostic.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "ParseError",
            CliError::Schema(_) | CliError::Io(_) => "SchemaError",
            CliError::Core(e) => e.kind(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.kind() == "NotInUniversalClass" {
            2
        } else {
            1
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
