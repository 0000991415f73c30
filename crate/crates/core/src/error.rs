use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent overflow at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("word too long: {len} syllables exceeds the limit of {limit}")]
    WordTooLong { len: usize, limit: usize },
    #[error("invalid rational literal {0:?}")]
    InvalidRational(String),
    #[error("not a unit: only monomials are invertible Laurent polynomials")]
    NotAUnit,
    #[error("specialization parameter must be nonzero")]
    ZeroParameter,
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("matrix determinant is {0}, expected 1")]
    NotUnimodular(String),
    #[error("the word is trivial in the free group")]
    TrivialWord,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("root isolation could not reach {digits} digits")]
    PrecisionExhausted { digits: u32 },
    #[error("invalid JSON: {0}")]
    InvalidJson(String),
    #[error("computation cancelled")]
    Cancelled,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
