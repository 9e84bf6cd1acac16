use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NotPositive(BigInt),

    #[error("{0} is not cube-free")]
    NotCubeFree(BigInt),

    #[error("{0} is not square-free")]
    NotSquareFree(BigInt),

    #[error("{a} is not invertible modulo {modulus}")]
    NotInvertible { a: BigInt, modulus: BigInt },

    #[error("n = {0} is wildly ramified (3 | n and n is not 12 mod 27); no normal integral basis")]
    Wild(BigInt),

    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    #[error("invalid norm {s} for n = {n}: {reason}")]
    InvalidNorm { n: BigInt, s: BigInt, reason: String },

    #[error("constructed element {x} + {y}ζ does not divide A_n for n = {n}")]
    PairDoesNotDivide { n: BigInt, x: BigInt, y: BigInt },

    #[error("elements belong to different fields (n = {0} vs n = {1})")]
    FieldMismatch(BigInt, BigInt),

    #[error("invalid pair ({a0}, {a1}) for n = {n}: {reason}")]
    InvalidPair { n: BigInt, a0: BigInt, a1: BigInt, reason: String },

    #[error("3 does not divide φ({0}); no cubic subfield")]
    NoCubicSubfield(BigInt),

    #[error("numeric precision of {0} bits is insufficient")]
    PrecisionInsufficient(u32),

    #[error("root isolation failed: {0}")]
    NoConvergence(String),

    /// A construction failed its built-in verification. This always points at
    /// an arithmetic bug, never at bad input.
    #[error("internal verification failed: {0}")]
    Internal(String),
}
