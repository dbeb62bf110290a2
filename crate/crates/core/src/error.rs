use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a usable prime: it must be an odd prime below 2^62 not dividing any denominator")]
    BadPrime(u64),
    #[error("polynomials share a common component")]
    CommonComponent,
    #[error("coordinate change is degenerate for this input")]
    DegenerateCoordinates,
    #[error("matrix has rank below 2")]
    RankDeficient,
    #[error("matrix does not define a surjection")]
    Unsurjective,
    #[error("computation inconclusive: {0}")]
    Inconclusive(String),
    #[error("random redraws exhausted after {0} attempts")]
    RetriesExhausted(usize),
    #[error("enumeration of {needed} subsets exceeds budget {budget}")]
    CapExceeded { needed: u128, budget: u128 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
