use thiserror::Error;

/// Errors raised by poset construction and the exact computation engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("cover pair references unknown label: {0}")]
    UnknownLabel(String),
    #[error("cover relation contains a cycle")]
    CoverCycle,
    #[error("cover ({0} < {1}) is transitively implied and must be omitted")]
    RedundantCover(String, String),
    #[error("operation requires a ranked poset")]
    UnrankedPoset,
    #[error("operation requires a bounded poset")]
    UnboundedPoset,
    #[error("poset has no unique minimum")]
    NoUniqueMinimum,
    #[error("elements are not comparable: {0} and {1}")]
    NotComparable(String, String),
    #[error("index {0} out of range (limit {1})")]
    IndexOutOfRange(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("complexity guard exceeded: {kind} needs {needed}, guard is {guard}")]
    GuardExceeded {
        kind: &'static str,
        needed: u64,
        guard: u64,
    },
    #[error("integer overflow in exact elimination")]
    ArithmeticOverflow,
    #[error("map is not a poset automorphism: {0}")]
    NotAutomorphism(String),
    #[error("polynomial expansion is not symmetric: monomials {0} and {1} have coefficients {2} and {3}")]
    NotSymmetric(String, String, String, String),
    #[error("need at least {needed} variables for degree-{degree} expansions, got {got}")]
    TooFewVariables {
        needed: usize,
        degree: usize,
        got: usize,
    },
    #[error("non-integral multiplicity {value} for {key}")]
    NonIntegralMultiplicity { key: String, value: String },
    #[error("unknown suite id: {0}")]
    UnknownSuite(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid poset file: {0}")]
    InvalidPosetFile(String),
    #[error("homology of input is not concentrated in top dimension; pass the override to proceed")]
    NotCohenMacaulay,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
