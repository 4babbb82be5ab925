use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid base {0}: expected 2 <= base <= 255")]
    InvalidBase(u32),
    #[error("digit {digit} out of range for base {base}")]
    InvalidDigit { digit: u32, base: u32 },
    #[error("invalid language spec: {0}")]
    InvalidSpec(String),
    #[error("cannot parse spec at `{path}`: {message}")]
    Parse { path: String, message: String },
    #[error("language is not regular: {0}")]
    NonRegular(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("no dominant positive real root: {0}")]
    NoDominantRealRoot(String),
    #[error("language is empty over the requested range")]
    EmptyLanguage,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("series diverges at z = {z}: abscissa is at least {sigma}")]
    Divergent { z: f64, sigma: f64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("network error: {0}")]
    Network(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a request the library cannot serve
    /// (as opposed to malformed input).
    pub fn is_capability(&self) -> bool {
        matches!(
            self,
            Error::NonRegular(_)
                | Error::ResourceLimit(_)
                | Error::NoDominantRealRoot(_)
                | Error::HypothesisViolated(_)
                | Error::Unsupported(_)
                | Error::Network(_)
                | Error::EmptyLanguage
                | Error::Divergent { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
