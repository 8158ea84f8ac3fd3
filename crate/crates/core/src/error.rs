use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("argument out of range: {0}")]
    Range(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("orientation undefined: |<A>| = {magnitude:e} is below threshold {threshold:e}")]
    UndefinedOrientation { magnitude: f64, threshold: f64 },
    #[error("principal axis undefined: anisotropy ratio {ratio} <= {threshold}")]
    UndefinedAxis { ratio: f64, threshold: f64 },
    #[error("degenerate linear orbit (eta = 1): {0}")]
    Singular(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
