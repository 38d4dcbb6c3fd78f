use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {family}{rank}: {reason}")]
    UnsupportedRootSystem {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("simple-root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("positive-root index {index} out of range ({count} positive roots)")]
    RootIndexOutOfRange { index: usize, count: usize },

    #[error("weight {weight} is not dominant")]
    NonDominant { weight: String },

    #[error("weight has {got} coordinates but the root system has rank {rank}")]
    RankMismatch { got: usize, rank: usize },

    #[error("partition {partition} has more than {max} parts")]
    TooManyParts { partition: String, max: usize },

    #[error("invalid partition: {reason}")]
    InvalidPartition { reason: String },

    #[error("{n} is too small for the partition correspondence (need n >= 2)")]
    InvalidGlRank { n: usize },

    #[error("weight {weight} is not a weight of V({highest})")]
    NotInSupport { weight: String, highest: String },

    #[error("direction {weight} is not in the root lattice")]
    NotInRootLattice { weight: String },

    #[error(
        "sum of highest weights {sum} lies outside the root lattice; \
         invariants vanish at every stretch by coset parity"
    )]
    SumNotInRootLattice { sum: String },

    #[error("factor list is empty")]
    EmptyFactorList,

    #[error("product dimension {needed} exceeds the configured ceiling {ceiling}")]
    DimensionCeiling { needed: String, ceiling: u64 },

    #[error("scan would visit {requested} instances, exceeding the budget of {budget}")]
    InstanceBudget { requested: String, budget: u64 },

    #[error("rank {rank} exceeds the Weyl-orbit enumeration limit ({limit})")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
