//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("e must be even and positive, got {0}")]
    OddExtensionDegree(u32),

    #[error("l must be positive")]
    ZeroFrobeniusExponent,

    #[error("e/s must be even, got e = {e} and s = gcd(l, e) = {s}")]
    OddEOverS { e: u32, s: u32 },

    #[error("parameter overflow: {0}")]
    Overflow(&'static str),

    #[error("element index {index} out of range for a field of {q} elements")]
    IndexOutOfRange { index: u64, q: u64 },

    #[error("division by zero in the field")]
    ZeroInverse,

    #[error("modulus must be a monic polynomial of degree {expected}, got degree {got}")]
    ModulusDegree { expected: u32, got: usize },

    #[error("modulus is reducible over F_p")]
    ModulusReducible,

    #[error("alpha must be nonzero")]
    ZeroAlpha,

    #[error("leading quadratic coefficient must be nonzero")]
    ZeroQuadraticCoefficient,

    #[error("rho must be a nonzero residue mod p, got {0}")]
    RhoOutOfRange(u64),

    #[error("m/s must be even for this computation")]
    MsParityOdd,

    #[error("{0} does not generate the multiplicative group mod p")]
    NotAGenerator(u64),

    #[error("code map is not injective: {zero_words} pairs produce the zero codeword")]
    NotInjective { zero_words: u64 },

    #[error("optimality classification requires k > 0 and d > 0")]
    DegenerateCode,

    #[error("closed-form multiplicity at weight {weight} is negative ({value})")]
    NegativeMultiplicity { weight: u64, value: i128 },

    #[error("closed-form multiplicity at weight {weight} has an odd numerator ({numerator})")]
    OddMultiplicityNumerator { weight: u64, numerator: i128 },
}
