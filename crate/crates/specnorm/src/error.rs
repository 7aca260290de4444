use thiserror::Error;

/// Crate-wide error type. Variants mirror the failure modes of the public
/// operations; construction-time validation means downstream operations can
/// assume well-formed inputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate point {0:?}")]
    DuplicatePoint(String),

    #[error("unknown point {0:?}")]
    UnknownPoint(String),

    #[error("specialization cycle through {a:?} and {b:?} violates antisymmetry")]
    CycleViolation { a: String, b: String },

    #[error("subset is empty")]
    EmptySubset,

    #[error("{from:?} does not strictly specialize to {to:?}")]
    NotASpecialization { from: String, to: String },

    #[error("map does not preserve specialization: {from:?} -> {to:?} has incomparable images")]
    NotMonotone { from: String, to: String },

    #[error("morphisms are not composable: target of the first differs from source of the second")]
    NotComposable,

    #[error("{what} budget exceeded: {detail}")]
    BudgetExceeded { what: String, detail: String },

    #[error("invalid size {0}")]
    InvalidSize(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{value} is too large for trial-division primality (divisors up to 10^6)")]
    PrimeTooLarge { value: u64 },

    #[error("polynomial {poly} is reducible: divisible by {factor}")]
    Reducible { poly: String, factor: String },

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("density must be a rational in [0, 1], got {0}")]
    InvalidDensity(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("no witness found within budget")]
    NotFound,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
