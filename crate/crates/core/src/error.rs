use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid field spec `{0}`: {1}")]
    FieldSpec(String, String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(u32),

    #[error("field order {p}^{m} is too large")]
    FieldTooLarge { p: u64, m: u32 },

    #[error("modulus {0:?} is not monic of the requested degree")]
    NotMonic(Vec<u64>),

    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u64>),

    #[error("element {0} does not belong to the field")]
    ForeignElement(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field contexts do not match")]
    FieldMismatch,

    #[error("{dst} is not an extension of {src}")]
    NotAnExtension { src: String, dst: String },

    #[error("no root of the source modulus found in the target field")]
    NoEmbedding,

    #[error("invalid group spec `{0}`: {1}")]
    GroupSpec(String, String),

    #[error("{path}: {msg}")]
    GroupFile { path: PathBuf, msg: String },

    #[error("group table failed validation: {0}")]
    InvalidGroup(String),

    #[error("invalid permutation: {0}")]
    BadPermutation(String),

    #[error("group order exceeds the cap of {0}")]
    GroupTooLarge(usize),

    #[error("group mismatch between operands")]
    GroupMismatch,

    #[error("cannot parse element `{0}`: {1}")]
    ElementSyntax(String, String),

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("matrix must be square, got {0}x{1}")]
    NotSquare(usize, usize),

    #[error("duplicate interpolation node")]
    DuplicateNode,

    #[error("an ideal needs at least one generator")]
    NoGenerators,

    #[error("zero element has no idempotent generator")]
    ZeroGenerator,

    #[error("the commutative shortcut requires a commutative group")]
    NotCommutative,

    #[error("trials must be at least 1")]
    NoTrials,

    #[error("zero code: the ideal is zero")]
    ZeroCode,

    #[error("minimum distance needs {needed} codewords, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for malformed user input (specs, files, syntax) as opposed to
    /// mathematical domain failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::FieldSpec(..)
                | Error::NotPrime(_)
                | Error::BadDegree(_)
                | Error::FieldTooLarge { .. }
                | Error::NotMonic(_)
                | Error::Reducible(_)
                | Error::GroupSpec(..)
                | Error::GroupFile { .. }
                | Error::InvalidGroup(_)
                | Error::BadPermutation(_)
                | Error::GroupTooLarge(_)
                | Error::ElementSyntax(..)
                | Error::Io(_)
        )
    }
}
