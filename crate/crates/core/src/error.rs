use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("composition of {0} exceeds the supported size of {max}", max = crate::compositions::MAX_SIZE)]
    TooLarge(usize),
    #[error("descent {descent} is outside 1..{n}")]
    DescentOutOfRange { descent: usize, n: usize },
    #[error("box index {k} is outside the valid range for a composition of {n}")]
    IndexOutOfRange { k: usize, n: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("operation needs a composition of size at least {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("cannot parse composition {0:?}")]
    ParseComposition(String),
    #[error("cannot parse polynomial {text:?}: {reason}")]
    ParsePoly { text: String, reason: String },
    #[error("polynomial involves variables other than q and t: {0}")]
    NotBivariate(String),
    #[error("binomial factor is identically zero")]
    ZeroBinomial,
    #[error("denominator vanishes at the sample point")]
    VanishingDenominator,
    #[error("could not find a sample point avoiding zero denominators after {0} attempts")]
    SamplingExhausted(usize),
    #[error("matrix is singular")]
    Singular,
    #[error("inexact division")]
    InexactDivision,
}

pub type Result<T> = std::result::Result<T, Error>;
