use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {n} outside supported range 1..={cap}")]
    DimensionOutOfRange { n: usize, cap: usize },

    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { n: usize, index: usize },

    #[error("basis blade {blade:#b} does not fit in dimension {n}")]
    BladeOutOfRange { n: usize, blade: u32 },

    #[error("element is not even")]
    NotEven,

    #[error("element does not satisfy g * reversal(g) = 1")]
    NotUnit,

    #[error("element is not a vector (degree 1)")]
    NotVector,

    #[error("chirality splitting requires even n, got {0}")]
    OddDimension(usize),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("kernel check requires r divisible by 4, got {0}")]
    KernelRank(u32),

    #[error("kernel check is exempt for r = 4 (the kernel is not central)")]
    KernelExempt,

    #[error("invalid structure: {0}")]
    InvalidStructure(String),

    #[error("factor {factor} is not defined for this structure: {reason}")]
    InvalidFactor { factor: String, reason: String },

    #[error("exterior power {power} exceeds dimension {dim}")]
    PowerExceedsDimension { power: u32, dim: usize },

    #[error("coordinate {0} is not assigned")]
    UnassignedCoordinate(String),

    #[error("enumeration guard exceeded: {count} weights > limit {limit}")]
    GuardExceeded { count: u128, limit: u128 },

    #[error("no pairing of multiplicities with chiralities is consistent with the structure group: {0}")]
    NoConsistentPairing(String),

    #[error("case not covered by the closed-form tables: {0}")]
    UncoveredCase(String),

    #[error("value list length mismatch for {what}: expected {expected}, got {got}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("tangent exponent {index} is zero: only isolated fixed points are supported")]
    ZeroTangentExponent { index: usize },

    #[error("exponent {value} at position {index} yields a non-integral power of w")]
    NonIntegralExponent { index: usize, value: String },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("series guard exceeded: {0}")]
    SeriesGuard(String),

    #[error("numeric overflow in {0}")]
    Overflow(&'static str),
}
