use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input list is not a strictly increasing list of positive integers.
    #[error("invalid gap list: {0}")]
    InvalidGapList(String),

    /// The complement of the candidate gap set is not closed under addition,
    /// so the input is not the gap set of any numerical semigroup.
    #[error("not co-closed: {a} and {b} are non-gaps but {a} + {b} is a gap")]
    NotCoclosed { a: u32, b: u32 },

    /// A gap exceeds 2g - 1, which no numerical semigroup of genus g allows.
    #[error("gap {gap} exceeds 2*{genus} - 1")]
    GapTooLarge { gap: u32, genus: u32 },

    /// Generators with gcd > 1 span a monoid with infinitely many gaps.
    #[error("generators have gcd {gcd}, expected 1")]
    NotCoprime { gcd: u64 },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("order sequences have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A classifier was called with a gamma that does not match the
    /// semigroup's even-gap count.
    #[error("semigroup has {actual} even gaps, expected gamma = {expected}")]
    GammaMismatch { expected: u32, actual: u32 },

    /// Enumeration refused to start: the requested genus is over the cap.
    #[error("genus {genus} exceeds enumeration cap {cap}")]
    GenusTooLarge { genus: u32, cap: u32 },

    #[error("invalid filter: {0}")]
    InvalidFilter(String),

    #[error("zero denominator in exact rational evaluation")]
    ZeroDenominator,

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("malformed cache file {path}: {reason}")]
    CacheFormat { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
