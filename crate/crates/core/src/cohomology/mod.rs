//! Truncated cohomology rings, maps induced in cohomology, and graded ideals with their powers.

mod ideal;
mod induced;
mod ring;

pub use ideal::{GradedIdeal, PowerTower, SpanningProduct};
pub use induced::{algebra_kernel, InducedMap};
pub use ring::{CohomologyRing, GradedRing};

use crate::gca::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("truncation must be at least 1")]
    TruncationTooSmall,
    #[error("boundaries in degree {0} are not cycles")]
    BoundariesNotCycles(usize),
    #[error("vector in degree {0} is not a cycle")]
    NotACycle(usize),
    #[error("degree windows do not match")]
    WindowMismatch,
    #[error("subspace is not closed under multiplication (degree {0})")]
    NotAnIdeal(usize),
    #[error("morphism does not match the given rings")]
    MismatchedAlgebras,
    #[error("induced map is not well defined in degree {0}")]
    NotWellDefined(usize),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
