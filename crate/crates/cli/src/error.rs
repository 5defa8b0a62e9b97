use thiserror::Error;

/// Failures of a CLI run, each mapped to a stable exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),

    #[error("{0}")]
    Integration(String),

    #[error("{0}")]
    LambdaDomain(String),

    #[error("{0}")]
    Verification(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Config(_) | Self::Io { .. } => 1,
            Self::Integration(_) => 2,
            Self::LambdaDomain(_) => 3,
            Self::Verification(_) => 4,
        }
    }
}

impl From<wdw_core::Error> for CliError {
    fn from(e: wdw_core::Error) -> Self {
        use wdw_core::Error as E;
        let msg = e.to_string();
        match e {
            E::IntegrationFailure { .. } => Self::Integration(msg),
            E::LambdaDomain(_) | E::GDomain(_) | E::ParameterDomain { .. } => {
                Self::LambdaDomain(msg)
            }
            E::InternalConsistency { .. } => Self::Verification(msg),
            _ => Self::Config(msg),
        }
    }
}
