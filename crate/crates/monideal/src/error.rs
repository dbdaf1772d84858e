use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("the unit monomial generates the unit ideal, which is outside the modeled universe")]
    UnitMonomial,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid model parameters: {0}")]
    InvalidParams(String),

    #[error("resolution too large: {generators} minimal generators exceeds the cap of {max}")]
    ResolutionTooLarge { generators: usize, max: usize },

    #[error("statistics over empty data")]
    EmptyData,

    #[error("invariant failed on element {index}: {source}")]
    ElementFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("draw {index} failed: {source}")]
    DrawFailed {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("sample directory already exists: {0}")]
    SampleExists(PathBuf),

    #[error("{file} line {line}: {msg}")]
    BadSampleFile {
        file: PathBuf,
        line: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
