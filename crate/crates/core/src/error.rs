use thiserror::Error;

/// Errors raised by the library. Every fallible public function returns this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} must be an exact rational (no q terms)")]
    NotRational(String),

    #[error("relation list contains a cycle through element {0}")]
    CyclicRelation(usize),

    #[error("not a unit interval order")]
    NotUnitIntervalOrder,

    #[error("poset is not labeled by nondecreasing beta values")]
    NonCanonicalLabeling,

    #[error("poset is not naturally labeled (some i <_P j has i > j)")]
    NotNaturallyLabeled,

    #[error("permutation {0} contains the pattern 312")]
    Not312Avoiding(String),

    #[error("permutation {0} contains 4231 or 3412; general Kazhdan-Lusztig polynomials are out of scope")]
    NonSmooth(String),

    #[error("function is not symmetric: coefficient of M_{first} is {first_value} but M_{second} is {second_value}")]
    NotSymmetric {
        first: String,
        first_value: String,
        second: String,
        second_value: String,
    },

    #[error("directed graph contains a cycle")]
    Cyclic,

    #[error("singular matrix")]
    Singular,

    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
