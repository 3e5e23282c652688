use thiserror::Error;

/// Errors raised by the exact algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("empty matrix")]
    EmptyMatrix,

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },

    #[error("zero generator in a cone description")]
    ZeroGenerator,

    #[error("cone is not pointed")]
    NonPointedCone,

    #[error("cone is not full-dimensional (rank {rank} in dimension {dim})")]
    NotFullDimensional { rank: usize, dim: usize },

    #[error("dimension {dim} exceeds the configured maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("lattice does not have full rank in the span of the cone")]
    LatticeRankDeficient,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("{0} is not an element of the monoid")]
    NotInMonoid(String),

    #[error("monoid is not contained in the ambient: generator {0} fails membership")]
    NotContained(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("ring or field mismatch between operands")]
    RingMismatch,

    #[error("{0} is zero in the quotient ring")]
    ZeroInQuotient(String),

    #[error("the zero ideal has no minimal primes")]
    ZeroIdeal,

    #[error("the unit ideal is contained in no prime")]
    UnitIdeal,

    #[error("the prime does not contain the ideal of the sequence")]
    PrimeDoesNotContain,

    #[error("invalid power vector: {0}")]
    InvalidPowers(String),

    #[error("empty sequence")]
    EmptySequence,

    #[error("invalid degree box: {0}")]
    InvalidBox(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("unknown scenario `{0}`")]
    UnknownScenario(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
