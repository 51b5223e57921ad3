use super::{CohomologyError, CohomologyRing, GradedIdeal, GradedRing};
use crate::gca::{morphism_matrix, CdgaMorphism, TruncatedAlgebra};
use crate::linalg::{RationalMatrix, SparseVec, SubspaceBasis};

/// `H(φ)` on the certified window, as one matrix per degree in class coordinates.
#[derive(Debug, Clone)]
pub struct InducedMap {
    matrices: Vec<RationalMatrix>,
}

impl InducedMap {
    pub fn new(phi: &CdgaMorphism, source: &CohomologyRing, target: &CohomologyRing) -> Result<Self, CohomologyError> {
        if phi.source().id() != source.algebra().id() || phi.target().id() != target.algebra().id() {
            return Err(CohomologyError::MismatchedAlgebras);
        }
        if source.truncation() != target.truncation() {
            return Err(CohomologyError::WindowMismatch);
        }
        let mut matrices = Vec::new();
        for k in 0..=source.certified_top() {
            let m = morphism_matrix(phi, source.source(), target.source(), k);
            // Boundaries have to land in boundaries for the map on classes to make sense.
            for b in source.boundaries(k).vectors() {
                let image = m.apply(b).expect("dimensions agree");
                if !target.boundaries(k).contains(&image).expect("dimensions agree") {
                    return Err(CohomologyError::NotWellDefined(k));
                }
            }
            let columns = source
                .representatives(k)
                .iter()
                .map(|rep| {
                    let image = m.apply(rep).expect("dimensions agree");
                    target.class_of(k, &image).map_err(|_| CohomologyError::NotWellDefined(k))
                })
                .collect::<Result<Vec<_>, _>>()?;
            matrices.push(RationalMatrix::from_columns(&columns, target.dim(k)).expect("columns fit"));
        }
        Ok(Self { matrices })
    }

    pub fn window(&self) -> usize {
        self.matrices.len() - 1
    }

    pub fn matrix(&self, degree: usize) -> &RationalMatrix {
        &self.matrices[degree]
    }

    pub fn apply(&self, degree: usize, class: &SparseVec) -> SparseVec {
        self.matrices[degree].apply(class).expect("class of the source")
    }

    /// `ker H(φ)` as an ideal of the source ring.
    pub fn kernel_ideal<'r>(&self, source: &'r CohomologyRing) -> GradedIdeal<'r, CohomologyRing> {
        let parts = self.matrices.iter().map(RationalMatrix::kernel_basis).collect();
        GradedIdeal::from_parts_unchecked(source, parts)
    }

    pub fn is_injective(&self, degree: usize) -> bool {
        self.matrices[degree].rank() == self.matrices[degree].cols()
    }
}

/// `ker φ` degreewise up to the truncation of `source`, as an ideal of the source algebra.
pub fn algebra_kernel<'r>(
    phi: &CdgaMorphism,
    source: &'r TruncatedAlgebra,
    target: &TruncatedAlgebra,
) -> Result<GradedIdeal<'r, TruncatedAlgebra>, CohomologyError> {
    if phi.source().id() != source.algebra().id() || phi.target().id() != target.algebra().id() {
        return Err(CohomologyError::MismatchedAlgebras);
    }
    if source.truncation() != target.truncation() {
        return Err(CohomologyError::WindowMismatch);
    }
    let parts: Vec<SubspaceBasis> =
        (0..=source.window()).map(|k| morphism_matrix(phi, source, target, k).kernel_basis()).collect();
    Ok(GradedIdeal::from_parts_unchecked(source, parts))
}
