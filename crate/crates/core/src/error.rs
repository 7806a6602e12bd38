use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("image array is not a bijection on 0..{0}")]
    NotBijective(usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("permutation parse error: {0}")]
    Parse(String),

    #[error("group spec error: {0}")]
    Spec(String),

    #[error("element {0} is not in the group")]
    NotInGroup(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("resource cap exceeded: {what} has order {order}, cap is {cap}")]
    CapExceeded { what: &'static str, order: u64, cap: u64 },

    #[error("no suitable prime found below {0}")]
    NoPrime(u64),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
