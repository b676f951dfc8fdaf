use thiserror::Error;

use crate::scalar::Ring;

/// Errors raised by the algebra engine and its front ends.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SkeinError {
    #[error("incompatible rings: {0} and {1}")]
    RingMismatch(Ring, Ring),

    #[error("not a unit in {ring}: {detail}")]
    NonUnit { ring: Ring, detail: String },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operation needs a Laurent scalar, got {0}")]
    NotLaurent(Ring),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("tensor slot {slot} out of range (algebra has {slots} slots)")]
    SlotOutOfRange { slot: usize, slots: usize },

    #[error("rewriting exceeded the step budget of {0}; the rule orientation is not terminating")]
    StepBudget(usize),

    #[error("degenerate presentation: relation `{0}` has a leading word of length < 2")]
    Degenerate(String),

    #[error("morphism has no image for generator `{0}`")]
    MissingImage(String),

    #[error("unsupported algebra for this operation: {0}")]
    Unsupported(String),

    #[error("invalid order N = {0}: must be odd and greater than 1")]
    InvalidOrder(i64),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("dimension {dim} exceeds the cap {cap}")]
    DimensionCap { dim: usize, cap: usize },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("presentation file: {0}")]
    File(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, SkeinError>;
