use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact: nonzero remainder")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("degree {degree} exceeds substitution order {order}")]
    DegreeTooHigh { degree: usize, order: usize },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("enumeration oracle bound exceeded: size {size} > {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("w must lie strictly between 0 and 1, got {0}")]
    InvalidW(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("root refinement exceeded {rounds} rounds; distinct roots should have separated")]
    RefinementBound { rounds: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
