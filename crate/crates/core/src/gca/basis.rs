use std::collections::HashMap;
use std::sync::Arc;

use super::{AlgebraError, Cdga, CdgaMorphism, Element, Monomial};
use crate::linalg::{RationalMatrix, SparseVec};

/// An algebra together with its monomial basis in degrees `0..=N` and the matrices of `d`.
#[derive(Debug, Clone)]
pub struct TruncatedAlgebra {
    algebra: Arc<Cdga>,
    truncation: usize,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
    /// `d_k : A_k → A_{k+1}` for `k < N`.
    differential: Vec<RationalMatrix>,
}

impl TruncatedAlgebra {
    pub fn new(algebra: Arc<Cdga>, truncation: usize) -> Self {
        let basis = algebra.basis_up_to(truncation);
        let index: Vec<HashMap<Monomial, usize>> =
            basis.iter().map(|ms| ms.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()).collect();
        let mut out = Self { algebra, truncation, basis, index, differential: Vec::new() };
        out.differential = (0..truncation)
            .map(|k| {
                let columns: Vec<SparseVec> = out.basis[k]
                    .iter()
                    .map(|m| {
                        let dm = out.algebra.apply_differential(&out.algebra.monomial_element(m)).expect("own element");
                        out.coords_in(k + 1, &dm).expect("d raises degree by one")
                    })
                    .collect();
                RationalMatrix::from_columns(&columns, out.basis[k + 1].len()).expect("columns fit")
            })
            .collect();
        out
    }

    pub fn algebra(&self) -> &Arc<Cdga> {
        &self.algebra
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.basis.get(degree).map_or(0, Vec::len)
    }

    pub fn basis(&self, degree: usize) -> &[Monomial] {
        &self.basis[degree]
    }

    /// Whether every nonzero degree of the algebra lies in the window.
    pub fn is_complete(&self) -> bool {
        self.algebra.top_degree().is_some_and(|top| top <= self.truncation)
    }

    /// Coordinates of an element homogeneous of degree `k` (or zero).
    pub fn coords_in(&self, k: usize, u: &Element) -> Result<SparseVec, AlgebraError> {
        if u.algebra_id() != self.algebra.id() {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        let mut out = SparseVec::new();
        for (m, c) in u.terms() {
            if m.degree() != k {
                return Err(AlgebraError::DegreeMismatch {
                    generator: "<element>".into(),
                    expected: k,
                    found: m.degree(),
                });
            }
            let i = *self.index[k].get(m).expect("standard monomial within the window");
            out.insert(i, c.clone());
        }
        Ok(out)
    }

    pub fn element(&self, k: usize, v: &SparseVec) -> Element {
        let mut out = self.algebra.zero();
        for (&i, c) in v {
            out.add_term(self.basis[k][i].clone(), c.clone());
        }
        out
    }

    pub fn basis_element(&self, k: usize, i: usize) -> Element {
        self.algebra.monomial_element(&self.basis[k][i])
    }

    pub fn differential_matrix(&self, k: usize) -> Option<&RationalMatrix> {
        self.differential.get(k)
    }

    /// Product of coordinate vectors in degrees `i` and `j`; `i + j` must be within the window.
    pub fn multiply_coords(&self, i: usize, u: &SparseVec, j: usize, v: &SparseVec) -> SparseVec {
        let a = self.element(i, u);
        let b = self.element(j, v);
        let ab = self.algebra.multiply(&a, &b).expect("same algebra");
        self.coords_in(i + j, &ab).expect("product is homogeneous")
    }
}

/// Matrix of `φ` in degree `k`, from `source`'s basis to `target`'s.
pub fn morphism_matrix(
    phi: &CdgaMorphism,
    source: &TruncatedAlgebra,
    target: &TruncatedAlgebra,
    k: usize,
) -> RationalMatrix {
    let columns: Vec<SparseVec> = (0..source.dim(k))
        .map(|i| {
            let image = phi.apply(&source.basis_element(k, i)).expect("basis element of the source");
            target.coords_in(k, &image).expect("morphisms preserve degree")
        })
        .collect();
    RationalMatrix::from_columns(&columns, target.dim(k)).expect("columns fit")
}

/// First degree `≤ N` in which `φ` fails to be onto, if any.
pub fn first_non_surjective_degree(phi: &CdgaMorphism, truncation: usize) -> Option<usize> {
    let source = TruncatedAlgebra::new(Arc::clone(phi.source()), truncation);
    let target = TruncatedAlgebra::new(Arc::clone(phi.target()), truncation);
    (0..=truncation).find(|&k| morphism_matrix(phi, &source, &target, k).rank() < target.dim(k))
}
