use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by precondition violations and internal consistency checks.
#[derive(Debug, Error)]
pub enum Error {
    #[error("negative input to {0}")]
    NegativeInput(&'static str),
    #[error("modulus must be at least {min}, got {got}")]
    BadModulus { min: u8, got: BigInt },
    #[error("modulus {0} too large for residue enumeration")]
    ModulusTooLarge(BigInt),
    #[error("negative exponent in mod_pow")]
    NegativeExponent,
    #[error("{0} is not an odd prime")]
    NotOddPrime(BigInt),
    #[error("{0} must be odd and positive")]
    EvenArgument(BigInt),
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("{p} is not a Sophie Germain prime: {reason}")]
    NotSophieGermain { p: BigInt, reason: String },
    #[error("alpha and beta must each be 0 or 1")]
    BadSign,
    #[error("alpha*beta must be 0")]
    BothSignsNegative,
    #[error("k must be at least 1")]
    KZero,
    #[error("residue class {0} must be odd")]
    EvenResidue(u64),
    #[error("residue class {k} out of range for modulus 2^{m}")]
    ResidueOutOfRange { k: u64, m: u32 },
    #[error("no theorem applies: {0}")]
    Unsupported(String),
    #[error("curve constant n must be nonzero")]
    ZeroCurveConstant,
    #[error("curve table mismatch: {0}")]
    TableMismatch(String),
    #[error("family verification failed: {0}")]
    FamilyVerification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
