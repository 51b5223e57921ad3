//! `hsecat` through homology injectivity of `ρ_m : A → A/K^{m+1}`, nilpotency of `ker H(φ)`,
//! cup-length, higher topological complexity, Poincaré duality and `msecat` on duality bases.

mod duality;
mod quotient;
mod result;

use std::sync::Arc;

pub use duality::{check_poincare_duality, poincare_duality_of, Finiteness, PairingRank, PoincareDualityReport};
pub use quotient::QuotientCdga;
pub(crate) use result::render_product;
pub use result::{Certification, Factor, InvariantResult, Witness};

use crate::cohomology::{
    algebra_kernel, CohomologyError, CohomologyRing, GradedIdeal, GradedRing, InducedMap, PowerTower,
};
use crate::gca::{morphism_matrix, AlgebraError, Cdga, CdgaMorphism, TruncatedAlgebra};
use crate::linalg::SubspaceBasis;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("morphism is not surjective in degree {degree}")]
    NotSurjective { degree: usize },
    #[error("n must be at least 2, got {0}")]
    InvalidTensorPower(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ideal is not stable under d (degree {0})")]
    NotDifferentialIdeal(usize),
    #[error("msecat not computable by this tool without PD")]
    PoincareDualityNotEstablished,
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Truncation used when none is given: enough for both ends of `φ`.
pub fn default_truncation(phi: &CdgaMorphism) -> usize {
    phi.source().default_truncation().max(phi.target().default_truncation())
}

/// Truncated source and target, after checking `φ` is onto in every degree `≤ N`.
fn surjective_setup(
    phi: &CdgaMorphism,
    truncation: usize,
) -> Result<(Arc<TruncatedAlgebra>, TruncatedAlgebra), InvariantError> {
    if truncation == 0 {
        return Err(CohomologyError::TruncationTooSmall.into());
    }
    let source = Arc::new(TruncatedAlgebra::new(Arc::clone(phi.source()), truncation));
    let target = TruncatedAlgebra::new(Arc::clone(phi.target()), truncation);
    for k in 0..=truncation {
        if morphism_matrix(phi, &source, &target, k).rank() < target.dim(k) {
            return Err(InvariantError::NotSurjective { degree: k });
        }
    }
    Ok((source, target))
}

fn power_parts(tower: &PowerTower<'_, TruncatedAlgebra>, source: &TruncatedAlgebra, p: usize) -> Vec<SubspaceBasis> {
    match tower.level(p) {
        Some(ideal) => (0..=source.truncation()).map(|k| ideal.part(k).clone()).collect(),
        None => (0..=source.truncation()).map(|k| SubspaceBasis::zero(source.dim(k))).collect(),
    }
}

/// `ρ_m : A → A/(ker φ)^{m+1}` with the induced differential.
pub fn quotient_rho(phi: &CdgaMorphism, m: u32, truncation: usize) -> Result<QuotientCdga, InvariantError> {
    let (source, target) = surjective_setup(phi, truncation)?;
    let kernel = algebra_kernel(phi, &source, &target)?;
    let tower = kernel.power_tower(m as usize + 1);
    let parts = power_parts(&tower, &source, m as usize + 1);
    QuotientCdga::new(Arc::clone(&source), m, parts)
}

/// Lowest-degree class killed by `ρ_m`, preferring a product of elements of `K` as witness.
fn first_failure(q: &QuotientCdga, h: &CohomologyRing, tower: &PowerTower<'_, TruncatedAlgebra>) -> Option<Witness> {
    let source = q.parent();
    let p = q.level() as usize + 1;
    for k in 0..=h.certified_top() {
        let kernel = q.homology_kernel(k, h);
        if kernel.dim() == 0 {
            continue;
        }
        let product = tower.spanning_products(p).iter().find(|sp| {
            sp.degree == k
                && h.cycles(k).contains(&sp.vector).unwrap_or(false)
                && !h.boundaries(k).contains(&sp.vector).unwrap_or(true)
        });
        return Some(match product {
            Some(sp) => Witness::InjectivityFailure {
                level: q.level(),
                degree: k,
                cycle: sp.vector.clone(),
                factors: Some(tower.factors_of(sp)),
                rendered: tower.render_factors(source, sp),
            },
            None => {
                let cycle = kernel.representatives()[0].clone();
                Witness::InjectivityFailure {
                    level: q.level(),
                    degree: k,
                    rendered: source.algebra().render(&source.element(k, &cycle)),
                    cycle,
                    factors: None,
                }
            }
        });
    }
    None
}

/// Smallest `m` with `H(ρ_m)` injective in degrees `≤ N-1`.
///
/// Exact when `A` vanishes above `N-1`; otherwise the smallest `m` without a visible failure,
/// which bounds the true value from below.
pub fn hsecat(phi: &CdgaMorphism, truncation: usize) -> Result<InvariantResult, InvariantError> {
    let (source, target) = surjective_setup(phi, truncation)?;
    let h = CohomologyRing::from_truncated(Arc::clone(&source))?;
    let kernel = algebra_kernel(phi, &source, &target)?;
    let tower = kernel.power_tower(truncation + 2);
    let mut failures = Vec::new();
    let mut m: u32 = 0;
    loop {
        let parts = power_parts(&tower, &source, m as usize + 1);
        let q = QuotientCdga::new(Arc::clone(&source), m, parts)?;
        match first_failure(&q, &h, &tower) {
            Some(w) => failures.push(w),
            None => break,
        }
        m += 1;
    }
    let status = if h.is_complete() { Certification::CertifiedExact } else { Certification::CertifiedLowerBound };
    Ok(InvariantResult {
        name: "hsecat".into(),
        value: m,
        status,
        truncation,
        witness: failures.last().cloned(),
        failures,
        note: None,
    })
}

/// Nilpotency of `ker H(φ)`; `φ` need not be surjective.
pub fn nil_ker_h(phi: &CdgaMorphism, truncation: usize) -> Result<InvariantResult, InvariantError> {
    let hs = CohomologyRing::compute(Arc::clone(phi.source()), truncation)?;
    let ht = CohomologyRing::compute(Arc::clone(phi.target()), truncation)?;
    let map = InducedMap::new(phi, &hs, &ht)?;
    let ideal: GradedIdeal<'_, CohomologyRing> = map.kernel_ideal(&hs);
    let mut result = ideal.nilpotency("nil ker H");
    result.truncation = truncation;
    Ok(result)
}

/// Nilpotency of the positive-degree ideal of `H(A)`.
pub fn cup_length(algebra: Arc<Cdga>, truncation: usize) -> Result<InvariantResult, InvariantError> {
    let mut result = nil_ker_h(&CdgaMorphism::augmentation(algebra), truncation)?;
    result.name = "cup-length".into();
    Ok(result)
}

/// `htc_n = hsecat(μ_n)` for the multiplication `A^{⊗n} → A`.
pub fn htc(algebra: Arc<Cdga>, n: usize, truncation: usize) -> Result<InvariantResult, InvariantError> {
    if n < 2 {
        return Err(InvariantError::InvalidTensorPower(n));
    }
    let mu = CdgaMorphism::multiplication(algebra, n)?;
    let mut result = hsecat(&mu, truncation)?;
    result.name = format!("htc_{n}");
    Ok(result)
}

/// `hsecat(φ)` reported as `msecat(φ)`, valid when the source satisfies Poincaré duality.
pub fn msecat_pd(phi: &CdgaMorphism, truncation: usize) -> Result<InvariantResult, InvariantError> {
    let report = check_poincare_duality(Arc::clone(phi.source()), truncation)?;
    if !report.is_pd {
        return Err(InvariantError::PoincareDualityNotEstablished);
    }
    let dim = report.formal_dimension.unwrap_or(0);
    Ok(hsecat(phi, truncation)?
        .relabeled("msecat", format!("equals hsecat: the base satisfies Poincaré duality in dimension {dim}")))
}

#[cfg(test)]
mod tests;
