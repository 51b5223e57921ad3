use std::collections::HashMap;
use std::sync::Arc;

use num::{One, Zero};

use super::CohomologyError;
use crate::gca::{Cdga, Element, TruncatedAlgebra};
use crate::linalg::{axpy, QuotientMap, SparseVec, SubspaceBasis};

/// A graded ring known in degrees `0..=window()` through a basis and a bilinear product.
pub trait GradedRing {
    /// Highest degree represented.
    fn window(&self) -> usize;

    fn dim(&self, degree: usize) -> usize;

    /// Product of coordinate vectors in degrees `i` and `j`, with `i + j ≤ window()`.
    fn multiply(&self, i: usize, u: &SparseVec, j: usize, v: &SparseVec) -> SparseVec;

    /// Whether the ring is zero above `window()`, so that every product is visible.
    fn is_complete(&self) -> bool;

    /// Human-readable form of a vector.
    fn render(&self, degree: usize, v: &SparseVec) -> String;

    /// Whether `render` gives a single monomial with coefficient 1.
    fn is_bare(&self, degree: usize, v: &SparseVec) -> bool;
}

fn is_single_unit_term(v: &SparseVec) -> bool {
    v.len() == 1 && v.values().all(One::is_one)
}

impl GradedRing for TruncatedAlgebra {
    fn window(&self) -> usize {
        self.truncation()
    }

    fn dim(&self, degree: usize) -> usize {
        TruncatedAlgebra::dim(self, degree)
    }

    fn multiply(&self, i: usize, u: &SparseVec, j: usize, v: &SparseVec) -> SparseVec {
        self.multiply_coords(i, u, j, v)
    }

    fn is_complete(&self) -> bool {
        TruncatedAlgebra::is_complete(self)
    }

    fn render(&self, degree: usize, v: &SparseVec) -> String {
        self.algebra().render(&self.element(degree, v))
    }

    fn is_bare(&self, _degree: usize, v: &SparseVec) -> bool {
        is_single_unit_term(v)
    }
}

/// `H(A, d)` in degrees `0..=N-1`, computed from `A` truncated at `N`.
///
/// Degree `N` is left out: its cycles would need `A_{N+1}`.
#[derive(Debug, Clone)]
pub struct CohomologyRing {
    source: Arc<TruncatedAlgebra>,
    cycles: Vec<SubspaceBasis>,
    boundaries: Vec<SubspaceBasis>,
    classes: Vec<QuotientMap>,
    /// `(i, a, j, b) ↦ [rep_a · rep_b]`, for `i + j` in the window.
    products: HashMap<(usize, usize, usize, usize), SparseVec>,
}

impl CohomologyRing {
    pub fn compute(algebra: Arc<Cdga>, truncation: usize) -> Result<Self, CohomologyError> {
        Self::from_truncated(Arc::new(TruncatedAlgebra::new(algebra, truncation)))
    }

    pub fn from_truncated(source: Arc<TruncatedAlgebra>) -> Result<Self, CohomologyError> {
        let n = source.truncation();
        if n == 0 {
            return Err(CohomologyError::TruncationTooSmall);
        }
        let mut cycles = Vec::with_capacity(n);
        let mut boundaries = Vec::with_capacity(n);
        let mut classes = Vec::with_capacity(n);
        for k in 0..n {
            let z = source.differential_matrix(k).expect("k < N").kernel_basis();
            let b = if k == 0 {
                SubspaceBasis::zero(source.dim(0))
            } else {
                source.differential_matrix(k - 1).expect("k - 1 < N").image_basis()
            };
            classes.push(QuotientMap::new(&z, &b).map_err(|_| CohomologyError::BoundariesNotCycles(k))?);
            cycles.push(z);
            boundaries.push(b);
        }
        let mut ring = Self { source, cycles, boundaries, classes, products: HashMap::new() };
        let window = n - 1;
        let mut products = HashMap::new();
        for i in 0..=window {
            for j in 0..=window - i {
                for a in 0..ring.dim(i) {
                    for b in 0..ring.dim(j) {
                        let ra = &ring.classes[i].representatives()[a];
                        let rb = &ring.classes[j].representatives()[b];
                        let prod = ring.source.multiply_coords(i, ra, j, rb);
                        let class = ring.class_of(i + j, &prod)?;
                        products.insert((i, a, j, b), class);
                    }
                }
            }
        }
        ring.products = products;
        Ok(ring)
    }

    pub fn source(&self) -> &Arc<TruncatedAlgebra> {
        &self.source
    }

    pub fn algebra(&self) -> &Arc<Cdga> {
        self.source.algebra()
    }

    /// The truncation `N` of the underlying algebra.
    pub fn truncation(&self) -> usize {
        self.source.truncation()
    }

    /// Highest certified degree, `N - 1`.
    pub fn certified_top(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn cycles(&self, k: usize) -> &SubspaceBasis {
        &self.cycles[k]
    }

    pub fn boundaries(&self, k: usize) -> &SubspaceBasis {
        &self.boundaries[k]
    }

    /// Cycle representatives of the basis classes in degree `k`, as vectors of `A_k`.
    pub fn representatives(&self, k: usize) -> &[SparseVec] {
        self.classes[k].representatives()
    }

    pub fn representative_element(&self, k: usize, i: usize) -> Element {
        self.source.element(k, &self.representatives(k)[i])
    }

    /// Class coordinates of a cycle of `A_k`.
    pub fn class_of(&self, k: usize, cycle: &SparseVec) -> Result<SparseVec, CohomologyError> {
        self.classes[k].coords(cycle).map_err(|_| CohomologyError::NotACycle(k))
    }

    /// A cycle representing the class with the given coordinates.
    pub fn lift(&self, k: usize, class: &SparseVec) -> SparseVec {
        self.classes[k].lift(class)
    }

    /// Graded dimensions over the certified window.
    pub fn dimensions(&self) -> Vec<usize> {
        (0..self.classes.len()).map(|k| self.classes[k].dim()).collect()
    }
}

impl GradedRing for CohomologyRing {
    fn window(&self) -> usize {
        self.certified_top()
    }

    fn dim(&self, degree: usize) -> usize {
        self.classes.get(degree).map_or(0, QuotientMap::dim)
    }

    fn multiply(&self, i: usize, u: &SparseVec, j: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&a, ca) in u {
            for (&b, cb) in v {
                let c = ca * cb;
                if c.is_zero() {
                    continue;
                }
                axpy(&mut out, &c, &self.products[&(i, a, j, b)]);
            }
        }
        out
    }

    fn is_complete(&self) -> bool {
        self.algebra().top_degree().is_some_and(|top| top <= self.certified_top())
    }

    fn render(&self, degree: usize, v: &SparseVec) -> String {
        self.source.render(degree, &self.lift(degree, v))
    }

    fn is_bare(&self, degree: usize, v: &SparseVec) -> bool {
        is_single_unit_term(&self.lift(degree, v))
    }
}
