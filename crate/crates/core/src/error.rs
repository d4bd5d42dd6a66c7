use std::path::PathBuf;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("channel selection {select} does not fit a {channels}-channel file")]
    ChannelMismatch { select: String, channels: u16 },

    #[error("unsupported audio format: {0}")]
    UnsupportedFormat(String),

    #[error("unstable filter: largest pole modulus is not below 1")]
    UnstableFilter,

    /// The signal carries too little information for the requested analysis.
    #[error("degenerate signal: {0}")]
    Degenerate(String),

    #[error("capture failed: {0}")]
    Capture(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Wav(#[from] hound::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn degenerate(msg: impl Into<String>) -> Self {
        Error::Degenerate(msg.into())
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad arguments rather than the environment.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::ChannelMismatch { .. } | Error::UnstableFilter
        )
    }

    pub fn is_io(&self) -> bool {
        matches!(
            self,
            Error::Io { .. }
                | Error::Wav(_)
                | Error::Csv(_)
                | Error::UnsupportedFormat(_)
                | Error::Capture(_)
        )
    }
}
