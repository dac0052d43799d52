use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },

    #[error("label {label} out of range for size {size}")]
    LabelOutOfRange { label: usize, size: usize },

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("{what} = {size} exceeds the enumeration cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("element set is not closed under the group law")]
    NotClosed,

    #[error("invalid partition {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("oracle is not constant on a coset: elements {g1} and {g2} share a coset but differ in value")]
    NotConstantOnCoset { g1: String, g2: String },

    #[error("oracle is not injective across cosets: cosets of {c1} and {c2} have the same value")]
    NotInjectiveAcrossCosets { c1: String, c2: String },

    #[error("transversal is not a section of the epimorphism at quotient element {0}")]
    NotASection(usize),

    #[error(
        "oracle value {value} at index {index} lies outside the target set of size {target_size}"
    )]
    OracleOutOfRange {
        index: usize,
        value: usize,
        target_size: usize,
    },

    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: u64, n: u64 },

    #[error("invalid modulus {n}: {reason}")]
    InvalidModulus { n: u64, reason: &'static str },

    #[error("no factor found within {0} rounds")]
    RoundsExhausted(usize),

    #[error("{0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("probabilities sum to {total}, outside tolerance of 1")]
    NormalizationBreach { total: f64 },

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
