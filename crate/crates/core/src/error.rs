use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime above 20000")]
    BadPrime(u32),
    #[error("ring context: {0}")]
    Ring(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("lines {first} and {second} define the same hyperplane")]
    Dependent { first: usize, second: usize },
    #[error("{0}")]
    Validation(String),
    #[error("internal limit: {0}")]
    Limit(String),
}

impl Error {
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::Limit(_))
    }
}

pub type RingError = Error;
pub type Result<T> = std::result::Result<T, Error>;
