use std::sync::Arc;

use super::InvariantError;
use crate::cohomology::{CohomologyRing, GradedRing};
use crate::gca::TruncatedAlgebra;
use crate::linalg::{unit_vec, QuotientMap, RationalMatrix, SparseVec, SubspaceBasis};

/// `A / P` with the induced differential, for a differential ideal `P` given degreewise up to
/// the truncation. Basis classes are represented by monomials of `A`.
#[derive(Debug, Clone)]
pub struct QuotientCdga {
    parent: Arc<TruncatedAlgebra>,
    level: u32,
    ideal: Vec<SubspaceBasis>,
    classes: Vec<QuotientMap>,
    /// `d̄_k` for `k < N`.
    dbar: Vec<RationalMatrix>,
}

impl QuotientCdga {
    /// `level` is the `m` in `A / K^{m+1}`, kept for reporting.
    pub fn new(parent: Arc<TruncatedAlgebra>, level: u32, ideal: Vec<SubspaceBasis>) -> Result<Self, InvariantError> {
        let n = parent.truncation();
        if ideal.len() != n + 1 || (0..=n).any(|k| ideal[k].ambient() != parent.dim(k)) {
            return Err(InvariantError::Cohomology(crate::cohomology::CohomologyError::WindowMismatch));
        }
        for k in 0..n {
            let d = parent.differential_matrix(k).expect("k < N");
            for v in ideal[k].vectors() {
                if !ideal[k + 1].contains(&d.apply(v).expect("dimensions agree")).expect("dimensions agree") {
                    return Err(InvariantError::NotDifferentialIdeal(k));
                }
            }
        }
        let classes: Vec<QuotientMap> = (0..=n)
            .map(|k| QuotientMap::new(&SubspaceBasis::full(parent.dim(k)), &ideal[k]).expect("P_k lies in A_k"))
            .collect();
        let dbar = (0..n)
            .map(|k| {
                let d = parent.differential_matrix(k).expect("k < N");
                let columns: Vec<SparseVec> = classes[k]
                    .representatives()
                    .iter()
                    .map(|r| classes[k + 1].coords(&d.apply(r).expect("dimensions agree")).expect("inside A"))
                    .collect();
                RationalMatrix::from_columns(&columns, classes[k + 1].dim()).expect("columns fit")
            })
            .collect();
        Ok(Self { parent, level, ideal, classes, dbar })
    }

    pub fn parent(&self) -> &Arc<TruncatedAlgebra> {
        &self.parent
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn truncation(&self) -> usize {
        self.parent.truncation()
    }

    pub fn ideal_part(&self, degree: usize) -> &SubspaceBasis {
        &self.ideal[degree]
    }

    /// Whether nothing is divided out, so `ρ` is the identity.
    pub fn is_identity(&self) -> bool {
        self.ideal.iter().all(SubspaceBasis::is_zero)
    }

    /// Monomials of `A` whose classes form the basis in degree `k`.
    pub fn basis_rendered(&self, k: usize) -> Vec<String> {
        self.classes[k]
            .representatives()
            .iter()
            .map(|r| self.parent.algebra().render(&self.parent.element(k, r)))
            .collect()
    }

    pub fn dbar(&self, k: usize) -> Option<&RationalMatrix> {
        self.dbar.get(k)
    }

    /// `ρ` on a vector of `A_k`.
    pub fn project(&self, k: usize, v: &SparseVec) -> SparseVec {
        self.classes[k].coords(v).expect("vector of A_k")
    }

    pub fn projection_matrix(&self, k: usize) -> RationalMatrix {
        let columns: Vec<SparseVec> = (0..self.parent.dim(k)).map(|i| self.project(k, &unit_vec(i))).collect();
        RationalMatrix::from_columns(&columns, self.classes[k].dim()).expect("columns fit")
    }

    /// Cycles of `A_k` whose image is a boundary of the quotient, for `k < N`.
    pub fn cycles_killed(&self, k: usize, h: &CohomologyRing) -> SubspaceBasis {
        let z = h.cycles(k);
        let incoming = if k == 0 { SubspaceBasis::zero(self.classes[0].dim()) } else { self.dbar[k - 1].image_basis() };
        let mod_boundaries =
            QuotientMap::new(&SubspaceBasis::full(self.classes[k].dim()), &incoming).expect("subspace");
        let columns: Vec<SparseVec> =
            z.vectors().iter().map(|c| mod_boundaries.coords(&self.project(k, c)).expect("inside")).collect();
        let composite = RationalMatrix::from_columns(&columns, mod_boundaries.dim()).expect("columns fit");
        let killed = composite.kernel_basis();
        let vectors = killed.vectors().iter().map(|coeffs| {
            let mut out = SparseVec::new();
            for (&i, c) in coeffs {
                crate::linalg::axpy(&mut out, c, &z.vectors()[i]);
            }
            out
        });
        SubspaceBasis::span(self.parent.dim(k), vectors.collect::<Vec<_>>()).expect("inside A_k")
    }

    /// `ker H(ρ)` in degree `k < N`, with cycle representatives of a basis.
    pub fn homology_kernel(&self, k: usize, h: &CohomologyRing) -> QuotientMap {
        QuotientMap::new(&self.cycles_killed(k, h), h.boundaries(k)).expect("boundaries are killed")
    }
}

impl GradedRing for QuotientCdga {
    fn window(&self) -> usize {
        self.truncation()
    }

    fn dim(&self, degree: usize) -> usize {
        self.classes.get(degree).map_or(0, QuotientMap::dim)
    }

    fn multiply(&self, i: usize, u: &SparseVec, j: usize, v: &SparseVec) -> SparseVec {
        let lu = self.classes[i].lift(u);
        let lv = self.classes[j].lift(v);
        self.project(i + j, &self.parent.multiply_coords(i, &lu, j, &lv))
    }

    fn is_complete(&self) -> bool {
        self.parent.is_complete()
    }

    fn render(&self, degree: usize, v: &SparseVec) -> String {
        self.parent.render(degree, &self.classes[degree].lift(v))
    }

    fn is_bare(&self, degree: usize, v: &SparseVec) -> bool {
        self.parent.is_bare(degree, &self.classes[degree].lift(v))
    }
}
