use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("length {0} exceeds the supported maximum of 64 coordinates")]
    LengthTooLarge(usize),

    #[error("dimension {k} exceeds the enumeration cap {cap}")]
    DimensionAboveCap { k: usize, cap: usize },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("prime {0} is outside the supported range (p <= 61)")]
    PrimeTooLarge(u64),

    #[error("polynomial {0} is not an irreducible divisor of x^p-1")]
    NotIrreducibleDivisor(String),

    #[error("element is zero")]
    ZeroElement,

    #[error("element is not in the ideal")]
    NotInIdeal,

    #[error("element is not invertible in the ideal")]
    NotInvertible,

    #[error("permutation is not an automorphism of the code")]
    NotAutomorphism,

    #[error("vector is not constant on the cycles of the permutation")]
    NotCycleConstant,

    #[error("vector does not have even weight on every cycle")]
    NotEvenOnCycles,

    #[error("vector already lies in the code")]
    VectorInCode,

    #[error("code of length {n} and dimension {k} exceeds the equivalence bound (n <= 40, k <= 20)")]
    SizeBound { n: usize, k: usize },

    #[error("automorphism group order overflows 128 bits")]
    GroupOrderOverflow,

    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
