use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("q = {0} is outside the supported range 2..=65536")]
    FieldTooLarge(u64),
    #[error("modulus {0:?} is not a monic irreducible polynomial of the required degree")]
    BadModulus(Vec<u32>),
    #[error("no built-in modulus for q = {0}; supply field.modulus")]
    MissingModulus(u64),
    #[error("mismatched cyclotomic conductors {0} and {1}")]
    ConductorMismatch(u32, u32),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
