//! Error type shared by all modules of the crate.

use thiserror::Error;

/// Errors produced by semigroup construction, semimodule primitives, tree
/// building and class propagation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An empty generator list was supplied.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// A generator equal to zero was supplied.
    #[error("generators must be positive (found 0)")]
    ZeroGenerator,

    /// The generators do not generate a numerical semigroup.
    #[error("gcd of generators is {gcd}, expected 1")]
    GcdNotOne { gcd: u64 },

    /// Checked integer arithmetic overflowed.
    #[error("integer overflow while computing {context}")]
    Overflow { context: &'static str },

    /// A membership query beyond the precomputed table.
    #[error("membership query {n} exceeds table bound {bound}")]
    OutOfBound { n: u64, bound: u64 },

    /// `c_of_gap` was called on a semigroup element.
    #[error("{x} is not a gap of the semigroup")]
    NotAGap { x: u64 },

    /// An operation that needs a proper submodule was called on the full module.
    #[error("operation undefined on the full semimodule (colength 0)")]
    FullModule,

    /// A generator index outside `0..m`.
    #[error("generator index {index} out of range for {len} generators")]
    IndexOutOfRange { index: usize, len: usize },

    /// The membership table is too small to certify the result.
    #[error("membership bound {bound} too small, need at least {required}")]
    BoundTooSmall { required: u64, bound: u64 },

    /// Tree construction on the full semigroup (a smooth point).
    #[error("semigroup is all of N; the semimodule tree is empty")]
    DegenerateSemigroup,

    /// Class propagation produced a negative power of L.
    #[error("cell class of semimodule with gaps {gaps:?} would have L-exponent {exponent}")]
    NegativeExponentUnderflow { gaps: Vec<u64>, exponent: i64 },

    /// A fast-path result disagrees with the brute-force oracle.
    #[error("oracle mismatch: {detail}")]
    OracleMismatch { detail: String },

    /// An invalid gap set was supplied to a semimodule constructor.
    #[error("invalid semimodule gap set: {detail}")]
    InvalidGapSet { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
