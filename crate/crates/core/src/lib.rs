//! Exact computation of rational sectional-category invariants of finitely presented
//! commutative differential graded algebras over ℚ.
//!
//! The crate is organized bottom-up:
//!
//! - [`gca`]: graded-commutative algebras, Koszul signs, differentials, morphisms, tensors.
//! - [`linalg`]: exact rational echelon forms, kernels, quotients.
//! - [`cohomology`]: truncated cohomology rings, induced maps, graded ideals and their powers.
//! - [`invariants`]: `hsecat`, `nil ker H`, cup-length, higher topological complexity,
//!   Poincaré duality detection and `msecat` on Poincaré duality bases.
//! - [`theorems`]: checks of the product inequalities on concrete and random instances.
//! - [`model_io`]: the model file format, the catalog of standard models, report output.

pub mod cohomology;
pub mod gca;
pub mod invariants;
pub mod linalg;
pub mod model_io;
pub mod theorems;

#[cfg(test)]
mod testkit;
