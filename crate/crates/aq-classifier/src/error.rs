use thiserror::Error;

/// Errors reported by the classifier.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The signature m of SO0(2,m) must be a positive integer.
    #[error("m must be at least 1 (got {0})")]
    InvalidRank(u32),

    /// A coordinate vector does not match the rank of the root system.
    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    /// A coordinate vector violates dominance for the compact simple roots.
    #[error("coordinate {index} must be nonnegative for a dominant vector")]
    NotDominant { index: usize },

    /// The requested subset of noncompact positive roots is not down-closed.
    #[error("subset is not a down-set of the noncompact positive roots")]
    NotDownSet,

    /// The requested subset of noncompact positive roots is not up-closed.
    #[error("subset is not an up-set of the noncompact positive roots")]
    NotUpSet,

    /// Down-set and up-set must be disjoint.
    #[error("down-set and up-set overlap")]
    Overlapping,

    /// A linear system required to be feasible has no solution.
    #[error("linear system is infeasible")]
    Infeasible,

    /// The Blattner parameter is defined only in the discrete range.
    #[error("class is outside the discrete range (down-set and up-set do not cover)")]
    NotDiscrete,

    /// A vector that must be a root of the ambient system is not one.
    #[error("vector is not a noncompact positive root")]
    NotARoot,

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    /// Malformed textual input (CLI pair specs, serialized records).
    #[error("parse error: {0}")]
    Parse(String),
}
