use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("polynomial is not lacunary: {0}")]
    NotLacunary(String),

    #[error("degenerate polynomial: {0}")]
    Degenerate(String),

    #[error("numeric failure: {message}")]
    NumericFailure {
        message: String,
        /// Best iterates at the point of failure, when a solver can provide them.
        best: Vec<Complex64>,
    },

    #[error("generator exhausted after {attempts} rejections (trial {trial})")]
    GeneratorExhausted { trial: u64, attempts: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn numeric(message: impl Into<String>) -> Self {
        Error::NumericFailure {
            message: message.into(),
            best: Vec::new(),
        }
    }
}
