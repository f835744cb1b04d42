use thiserror::Error;

use crate::coalition::Coalition;

/// Largest population a bit-mask coalition can hold.
pub const MAX_VOTERS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("population size {0} is outside 1..={MAX_VOTERS}")]
    PopulationSize(usize),

    #[error("voter index {voter} is outside 1..={n}")]
    VoterOutOfRange { voter: usize, n: usize },

    #[error("coalition #{index} has no members")]
    EmptyCoalition { index: usize },

    #[error("population mismatch: expected {expected} voters, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coalition set has not passed M-winning validation")]
    NotValidated,

    #[error("subset sequence is not valid: {0}")]
    InvalidSequence(String),

    #[error("exhaustive scan over {n} voters exceeds the configured bound of {bound}")]
    BoundExceeded { n: usize, bound: usize },

    #[error("search budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("window ({l},{k}) is not valid for a sequence of length {len}")]
    Window { l: usize, k: usize, len: usize },

    #[error("path enumeration exceeded the limit of {limit} paths (window ending at {k})")]
    PathLimit { limit: usize, k: usize },

    #[error("scripted choice {choice} at iteration {k} rejected: {reason}")]
    ScriptRejected {
        k: usize,
        choice: Coalition,
        reason: String,
    },

    #[error("script ended at iteration {k} while {available} admissible subsets remain")]
    ScriptIncomplete { k: usize, available: usize },

    #[error("leftover order rejected: {0}")]
    LeftoverOrder(String),

    #[error("invalid profile: {0}")]
    Profile(String),

    #[error("rule is not defined on this domain: {0}")]
    Domain(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
