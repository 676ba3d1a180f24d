use thiserror::Error;

/// Errors raised anywhere in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is not a primitive polynomial")]
    NotPrimitivePolynomial(String),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),
    #[error("{d} does not divide the extension degree {m}")]
    NotDivisor { d: u32, m: u32 },
    #[error("discrete logarithm of zero")]
    LogOfZero,
    #[error("zero is not a valid input here")]
    ZeroInput,
    #[error("element {0} is not in the field")]
    ElementOutOfRange(u32),
    #[error("cyclotomic integers over different primes ({0} and {1})")]
    MixedPrimes(u32, u32),
    #[error("element {0} is not in the group")]
    ElementNotInGroup(u32),
    #[error("empty set")]
    EmptySet,
    #[error("construction requires odd characteristic")]
    EvenCharacteristic,
    #[error("construction requires odd extension degree, got m = {0}")]
    EvenDegree(u32),
    #[error("x^{rho} + x is not two-to-one on GF(2^{m})")]
    NotTwoToOne { rho: u64, m: u32 },
    #[error("not a quadratic form: {0}")]
    NotQuadraticForm(String),
    #[error("unknown kind: {0}")]
    UnknownKind(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("character sum is not rational")]
    NonRationalSum,
    #[error("weight is not integral")]
    NonIntegralWeight,
    #[error("code is zero-dimensional")]
    ZeroDimensional,
    #[error("dimension mismatch: codeword count gives {count}, matrix rank gives {rank}")]
    DimensionMismatch { count: u32, rank: u32 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
