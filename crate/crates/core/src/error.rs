use thiserror::Error;

/// Errors reported by constructors, enumerators, and classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gap values must be positive, got {0}")]
    InvalidGap(i64),

    #[error("gap value {value} exceeds the supported maximum {limit}")]
    GapTooLarge { value: i64, limit: i64 },

    #[error("generator values must be positive, got {0}")]
    InvalidGenerator(i64),

    #[error("generator value {value} exceeds the supported maximum {limit}")]
    GeneratorTooLarge { value: i64, limit: i64 },

    #[error("at least one generator is required")]
    EmptyGenerators,

    #[error("generators have gcd {gcd} > 1, so the complement is infinite")]
    InfiniteComplement { gcd: i64 },

    #[error("computed Frobenius number {frobenius} exceeds the supported maximum {limit}")]
    FrobeniusTooLarge { frobenius: i64, limit: i64 },

    #[error("not closed under addition: {a} and {b} are members but {sum} is not", sum = .a + .b)]
    NotClosed { a: i64, b: i64 },

    #[error("the dual of the set of all nonnegative integers is undefined")]
    DualOfNat,

    #[error("{size} elements exceed the subset-enumeration limit {limit}; use the DFS enumerator for larger posets")]
    VoidTooLarge { size: usize, limit: usize },

    #[error("frobenius number {frobenius} is outside the supported census range 1..={max}")]
    CensusRange { frobenius: i64, max: i64 },

    #[error("estimated work of {estimate} choice tuples exceeds the budget {budget}; raise the budget to proceed")]
    BudgetExceeded { estimate: u128, budget: u128 },

    #[error("expected a semigroup of type {expected}, got type {actual}")]
    WrongType { expected: usize, actual: usize },

    #[error("not of maximal embedding dimension: {embedding_dimension} minimal generators but multiplicity {multiplicity}")]
    NotMaxEmbeddingDimension {
        embedding_dimension: usize,
        multiplicity: i64,
    },

    #[error("semigroup is not triangle-free: {p} - {q} = {diff} lies in the void", diff = .p - .q)]
    NotTriangleFree { p: i64, q: i64 },

    #[error("count does not fit in 64 bits")]
    CountOverflow,

    #[error("invalid parameters for family {family}: {reason}")]
    FamilyParams {
        family: &'static str,
        reason: String,
    },

    #[error("partition parts must be positive and weakly decreasing: {0}")]
    InvalidPartition(String),

    #[error("invalid semigroup description: {0}")]
    Description(String),

    #[error("internal consistency check failed: {0}")]
    InternalCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
