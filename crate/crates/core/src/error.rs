use std::path::PathBuf;

/// Errors raised by the library and the `bdl` front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid drift bounds: {0}")]
    InvalidParams(String),

    #[error("invalid argument `{name}`: {reason}")]
    InvalidArgument { name: &'static str, reason: String },

    #[error("time {time} is not a multiple of dt = {dt}")]
    Misaligned { time: f64, dt: f64 },

    #[error("x = {x} lies within h = {h} of the threshold {threshold}")]
    NearThreshold { x: f64, h: f64, threshold: f64 },

    #[error("state became non-finite after {step} steps")]
    NonFinite { step: u64 },

    #[error("config key `{key}`: {message}")]
    Config { key: String, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl Error {
    pub(crate) fn arg(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidArgument {
            name,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 1 for configuration and argument problems, 2 for
    /// I/O, 3 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_)
            | Error::InvalidArgument { .. }
            | Error::Misaligned { .. }
            | Error::NearThreshold { .. }
            | Error::Config { .. } => 1,
            Error::Io { .. } => 2,
            Error::NonFinite { .. } | Error::Numeric(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
