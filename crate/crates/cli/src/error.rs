use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] kepler_so4::Error),
    #[error("{0} verification check(s) failed")]
    Verify(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(kepler_so4::Error::Io { .. }) => 4,
            CliError::Core(_) => 2,
            CliError::Verify(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
