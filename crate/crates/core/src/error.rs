use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative input: {0}")]
    NegativeInput(String),
    #[error("not a ray: the zero vector spans no line")]
    NotARay,
    #[error("coordinates are not coprime: {0}")]
    NotCoprime(String),
    #[error("ray does not meet the rational unit sphere")]
    NotOnSphere,
    #[error("rays are collinear")]
    Collinear,
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("matrix is not a rotation: {0}")]
    NotRotation(String),
    #[error("point is not on the equator")]
    NotOnEquator,
    #[error("assignment covers {given} of {expected} vertices")]
    PartialAssignment { given: usize, expected: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
