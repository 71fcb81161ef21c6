use thiserror::Error;

/// Errors produced by the invariant computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {0} is smaller than 2")]
    EntryTooSmall(i64),
    #[error("an exponent tuple needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("enumeration would visit {needed} tuples, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{modulus} is not a common multiple of the base exponents")]
    NotCommonMultiple { modulus: u64 },
    #[error("the sphere criterion requires n >= 3, got n = {0}")]
    DimensionTooLow(usize),
    #[error("expects odd n >= 3, got n = {0}")]
    BadParity(u64),
    #[error("expects odd n >= 5, got n = {0}")]
    BadDimension(u64),
    #[error("generator degree is not an integer: critical manifold dimension {0} is even")]
    NonIntegerDegree(u64),
    #[error("orbit kind does not belong to this perturbation family")]
    WrongFamily,
    #[error("branch index {k} out of range 0..{p}")]
    BranchOutOfRange { k: u64, p: u64 },
    #[error("the principal Robbin-Salamon index vanishes, the mean Euler characteristic is undefined")]
    ZeroPrincipalIndex,
    #[error("stratum Euler characteristic did not reduce to an integer")]
    NonIntegerResult,
    #[error("tuple is not verified to be a standard smooth sphere")]
    NotStandardSphere,
    #[error("almost-contact classes live in different groups")]
    MixedGroups,
    #[error("need ac(sigma1) > 0 and ac(sigma2) < 0")]
    SignConditionFailed,
    #[error("tuples have different dimensions: {0} vs {1}")]
    DimensionMismatch(u64, u64),
    #[error("empty input")]
    EmptyInput,
    #[error("no reference value in dimension {0}: supported dimensions are 7, 11, 15")]
    UnsupportedDimension(u64),
    #[error("a linear family c*k + r must satisfy c >= 0 and c + r >= 2")]
    InvalidFamily,
}

pub type Result<T> = std::result::Result<T, Error>;
