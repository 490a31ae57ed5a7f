use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("specialization point is not invertible")]
    NotInvertible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("repeated odd entry in triple word")]
    OddRepetition,
    #[error("operation requires n >= d (n = {n}, d = {d})")]
    NeedNAtLeastD { n: usize, d: usize },
    #[error("operation requires a field")]
    NeedField,
    #[error("anti-involution is not standard: {0}")]
    NotStandard(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
