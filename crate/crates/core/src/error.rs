use thiserror::Error;

/// Errors raised by ring, ideal and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("order undefined for the zero polynomial (+inf)")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("basis is not a Groebner basis for a global order")]
    NotGroebner,
    #[error("operation requires a {expected} monomial order")]
    WrongOrder { expected: &'static str },
    #[error("ideal has a non-monomial generator: {0}")]
    NotMonomial(String),
    #[error("ideal has a non-homogeneous generator: {0}")]
    NotHomogeneous(String),
    #[error("ideal is not zero-dimensional")]
    NotArtinian,
    #[error("unit ideal where a proper ideal is required")]
    UnitIdeal,
    #[error("cannot certify: {0}")]
    CannotCertify(String),
    #[error("certificate `{identity}` failed: {detail}")]
    CertificateFailed { identity: String, detail: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{stage}: {source}")]
    Stage {
        stage: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn at_stage(self, stage: &str) -> Error {
        Error::Stage {
            stage: stage.to_string(),
            source: Box::new(self),
        }
    }

    /// True when the error (or the error it wraps) is a declined certification.
    pub fn is_cannot_certify(&self) -> bool {
        match self {
            Error::CannotCertify(_) => true,
            Error::Stage { source, .. } => source.is_cannot_certify(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
