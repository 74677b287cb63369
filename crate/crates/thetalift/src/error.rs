use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coefficient index n = {n} is not in Z - sgn(delta) Q({h})")]
    SupportViolation { n: String, h: i64 },
    #[error("coefficient symmetry violated at n = {n}, h = {h}")]
    SymmetryViolation { n: String, h: i64 },
    #[error("lattice vectors of different levels ({0} and {1})")]
    LevelMismatch(i64, i64),
    #[error("{m} is not an exact divisor of {n}")]
    NotExactDivisor { m: i64, n: i64 },
    #[error("no admissible represented integer found for {0}")]
    NoRepresentation(String),
    #[error("orbit enumeration bound exhausted: {0}")]
    OrbitBound(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("unknown suite {0}")]
    UnknownSuite(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
