use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("evaluation at a pole of the rational part (x = {0})")]
    Pole(String),
    #[error("cannot add Gaussian-weighted functions with weights {0} and {1}")]
    WeightMismatch(i64, i64),
    #[error("Wronskian of the seed set {0:?} vanishes identically")]
    DegenerateWronskian(Vec<i64>),
    #[error("invalid seed set {0:?}: {1}")]
    InvalidSeeds(Vec<i64>, &'static str),
    #[error("no partner level with index {0}")]
    NoSuchLevel(i64),
    #[error("unknown ladder operator `{0}`")]
    UnknownOperator(String),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("coherent-state truncation exhausted at K = {0} before the tail criterion was met")]
    InsufficientTruncation(usize),
    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
