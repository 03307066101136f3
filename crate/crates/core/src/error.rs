use thiserror::Error;

use crate::gf2::BitVec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix has a nonzero diagonal entry at position {0}")]
    NonzeroDiagonal(usize),

    #[error("cannot mix real and complex Pauli elements")]
    ModeMismatch,

    #[error("invalid code: {0}")]
    InvalidCode(String),

    #[error("classical code does not contain its dual; {witness} lies in C-perp but not in C")]
    NotDualContaining { witness: String },

    #[error("unknown builtin code `{0}`")]
    UnknownBuiltin(String),

    #[error("{p} is not a prime congruent to 5 mod 8")]
    InvalidPrime { p: u64 },

    #[error("value out of range: {0}")]
    OutOfRange(String),

    #[error("n = {n} exceeds the supported maximum of {max} qubits for this operation")]
    TooLarge { n: usize, max: usize },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn dim(expected: usize, found: usize) -> Self {
        Error::Dimension { expected, found }
    }

    pub(crate) fn not_dual_containing(witness: &BitVec) -> Self {
        Error::NotDualContaining {
            witness: witness.to_string(),
        }
    }
}
