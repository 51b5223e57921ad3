//! Exact linear algebra over the rationals.
//!
//! Everything downstream (cycles, boundaries, ideal powers, quotients) is computed one graded
//! degree at a time, so the matrices stay small. Vectors are sparse maps from coordinate to a
//! nonzero [`BigRational`].

mod matrix;
mod subspace;

pub use matrix::RationalMatrix;
pub use subspace::{QuotientMap, SpanSolver, SubspaceBasis};

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Sparse rational vector. Stored entries are never zero.
pub type SparseVec = BTreeMap<usize, Q>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the ambient subspace")]
    NotASubspace,
    #[error("vector does not lie in the subspace")]
    NotInSubspace,
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn unit_vec(i: usize) -> SparseVec {
    let mut v = SparseVec::new();
    v.insert(i, Q::one());
    v
}

pub fn dense_to_sparse(entries: &[Q]) -> SparseVec {
    entries.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
}

pub fn sparse_to_dense(v: &SparseVec, dim: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); dim];
    for (&i, c) in v {
        out[i] = c.clone();
    }
    out
}

/// `target += factor * source`
pub fn axpy(target: &mut SparseVec, factor: &Q, source: &SparseVec) {
    if factor.is_zero() {
        return;
    }
    for (&i, c) in source {
        let entry = target.entry(i).or_insert_with(Q::zero);
        *entry += factor * c;
        if entry.is_zero() {
            target.remove(&i);
        }
    }
}

pub fn scale(v: &SparseVec, factor: &Q) -> SparseVec {
    if factor.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&i, c)| (i, c * factor)).collect()
}

pub fn max_index(v: &SparseVec) -> Option<usize> {
    v.keys().next_back().copied()
}
