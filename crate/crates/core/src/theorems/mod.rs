//! Checks of the product inequalities for `hsecat` on concrete and randomly generated pairs of
//! morphisms.

mod random;
mod report;

use std::sync::Arc;

use rayon::prelude::*;

pub use random::{random_instance, RandomInstance, SizeParams};
pub use report::{Check, InclusionCheck, Relation, ReportValue, Verdict, VerificationReport};

use crate::cohomology::{algebra_kernel, GradedIdeal};
use crate::gca::{Cdga, CdgaMorphism, TensorProduct, TruncatedAlgebra};
use crate::invariants::{check_poincare_duality, hsecat, htc, nil_ker_h, InvariantError};
use crate::linalg::{SparseVec, SubspaceBasis};
use crate::model_io::catalog;

fn describe(phi: &CdgaMorphism) -> String {
    format!("{:?} -> {:?}", phi.source(), phi.target())
}

fn has_zero_differential(phi: &CdgaMorphism) -> bool {
    phi.source().has_zero_differential() && phi.target().has_zero_differential()
}

fn new_report(kind: &str, instance: String, truncation: usize) -> VerificationReport {
    VerificationReport {
        kind: kind.into(),
        instance,
        truncation,
        values: Vec::new(),
        checks: Vec::new(),
        inclusions: Vec::new(),
    }
}

/// `hsecat(φ₁ ⊗ φ₂) ≤ hsecat(φ₁) + hsecat(φ₂)`, plus the kernel inclusions behind it when both
/// maps have zero differential.
pub fn verify_subadditivity(
    phi1: &CdgaMorphism,
    phi2: &CdgaMorphism,
    truncation: usize,
) -> Result<VerificationReport, InvariantError> {
    verify_subadditivity_named(phi1, phi2, truncation, format!("phi1: {}; phi2: {}", describe(phi1), describe(phi2)))
}

fn verify_subadditivity_named(
    phi1: &CdgaMorphism,
    phi2: &CdgaMorphism,
    truncation: usize,
    instance: String,
) -> Result<VerificationReport, InvariantError> {
    let product = phi1.tensor(phi2)?;
    let mut report = new_report("subadditivity", instance, truncation);
    let h1 = hsecat(phi1, truncation)?;
    let h2 = hsecat(phi2, truncation)?;
    let h12 = hsecat(&product, truncation)?;
    report.values.push(ReportValue::from_result("hsecat(phi1)", &h1));
    report.values.push(ReportValue::from_result("hsecat(phi2)", &h2));
    report.values.push(ReportValue::from_result("hsecat(phi1 x phi2)", &h12));
    report.check(&["hsecat(phi1 x phi2)"], Relation::AtMost, &["hsecat(phi1)", "hsecat(phi2)"]);
    if has_zero_differential(phi1) && has_zero_differential(phi2) {
        report.inclusions.extend(kernel_inclusions(phi1, phi2, &product, h1.value, h2.value, truncation)?);
    }
    Ok(report)
}

/// Degreewise span of `U_i ⊗ V_j` over `i + j = k`, in coordinates of the truncated product.
fn tensor_span(
    tp: &TensorProduct,
    target: &TruncatedAlgebra,
    left: (&TruncatedAlgebra, &dyn Fn(usize) -> Vec<SparseVec>),
    right: (&TruncatedAlgebra, &dyn Fn(usize) -> Vec<SparseVec>),
    k: usize,
) -> Vec<SparseVec> {
    let mut out = Vec::new();
    for i in 0..=k {
        let us = (left.1)(i);
        let vs = (right.1)(k - i);
        for u in &us {
            let a = left.0.element(i, u);
            for v in &vs {
                let b = right.0.element(k - i, v);
                let ab = tp.tensor(&a, &b).expect("elements of the factors");
                out.push(target.coords_in(k, &ab).expect("homogeneous of degree k"));
            }
        }
    }
    out
}

/// `L = K₁⊗A₂ + A₁⊗K₂` and `L^{m+n+1} ⊆ K₁^{m+1}⊗A₂ + A₁⊗K₂^{n+1}`, degreewise up to `N`.
fn kernel_inclusions(
    phi1: &CdgaMorphism,
    phi2: &CdgaMorphism,
    product: &CdgaMorphism,
    m: u32,
    n: u32,
    truncation: usize,
) -> Result<Vec<InclusionCheck>, InvariantError> {
    let trunc = |a: &Arc<Cdga>| TruncatedAlgebra::new(Arc::clone(a), truncation);
    let (a1, b1, a2, b2) = (trunc(phi1.source()), trunc(phi1.target()), trunc(phi2.source()), trunc(phi2.target()));
    let (a, b) = (trunc(product.source()), trunc(product.target()));
    let tp = TensorProduct::new(phi1.source(), phi2.source());
    let k1 = algebra_kernel(phi1, &a1, &b1)?;
    let k2 = algebra_kernel(phi2, &a2, &b2)?;
    let l = algebra_kernel(product, &a, &b)?;
    let full1 = |d: usize| SubspaceBasis::full(a1.dim(d)).vectors().to_vec();
    let full2 = |d: usize| SubspaceBasis::full(a2.dim(d)).vectors().to_vec();

    let decomposition = |p1: &GradedIdeal<'_, TruncatedAlgebra>, p2: &GradedIdeal<'_, TruncatedAlgebra>, d: usize| {
        let part1 = |i: usize| p1.part(i).vectors().to_vec();
        let part2 = |j: usize| p2.part(j).vectors().to_vec();
        let mut vs = tensor_span(&tp, &a, (&a1, &part1), (&a2, &full2), d);
        vs.extend(tensor_span(&tp, &a, (&a1, &full1), (&a2, &part2), d));
        SubspaceBasis::span(a.dim(d), vs).expect("coordinates of the product")
    };

    let first = (0..=truncation).find(|&d| decomposition(&k1, &k2, d) != *l.part(d));
    let power_l = l.power((m + n + 1) as usize);
    let (k1p, k2p) = (k1.power(m as usize + 1), k2.power(n as usize + 1));
    let second = (0..=truncation).find(|&d| {
        let target = decomposition(&k1p, &k2p, d);
        !power_l.part(d).is_subspace_of(&target).expect("same ambient")
    });
    Ok(vec![
        InclusionCheck {
            claim: "L = K1 x A2 + A1 x K2".into(),
            degrees_checked: truncation + 1,
            failing_degree: first,
        },
        InclusionCheck {
            claim: format!("L^{} <= K1^{} x A2 + A1 x K2^{}", m + n + 1, m + 1, n + 1),
            degrees_checked: truncation + 1,
            failing_degree: second,
        },
    ])
}

fn pd_established(a: &Arc<Cdga>, truncation: usize) -> Result<bool, InvariantError> {
    Ok(check_poincare_duality(Arc::clone(a), truncation)?.is_pd)
}

/// `hsecat(φ₁ ⊗ φ₂) ≥ hsecat(φ₁) + nil ker H(φ₂)`; when both sources satisfy Poincaré duality
/// also `msecat(φ₁ ⊗ φ₂) = msecat(φ₁) + msecat(φ₂)` through `msecat = hsecat`.
pub fn verify_lower_chain(
    phi1: &CdgaMorphism,
    phi2: &CdgaMorphism,
    truncation: usize,
) -> Result<VerificationReport, InvariantError> {
    verify_lower_chain_named(phi1, phi2, truncation, format!("phi1: {}; phi2: {}", describe(phi1), describe(phi2)))
}

fn verify_lower_chain_named(
    phi1: &CdgaMorphism,
    phi2: &CdgaMorphism,
    truncation: usize,
    instance: String,
) -> Result<VerificationReport, InvariantError> {
    let product = phi1.tensor(phi2)?;
    let mut report = new_report("lower-chain", instance, truncation);
    let pd = pd_established(phi1.source(), truncation)? && pd_established(phi2.source(), truncation)?;
    let prefix = if pd { "msecat" } else { "hsecat" };
    let (l1, l2, l12) = (format!("{prefix}(phi1)"), format!("{prefix}(phi2)"), format!("{prefix}(phi1 x phi2)"));
    report.values.push(ReportValue::from_result(l1.clone(), &hsecat(phi1, truncation)?));
    report.values.push(ReportValue::from_result(l2.clone(), &hsecat(phi2, truncation)?));
    report.values.push(ReportValue::from_result("nil ker H(phi2)", &nil_ker_h(phi2, truncation)?));
    report.values.push(ReportValue::from_result(l12.clone(), &hsecat(&product, truncation)?));
    report.check(&[&l12], Relation::AtLeast, &[&l1, "nil ker H(phi2)"]);
    if pd {
        report.check(&[&l12], Relation::AtLeast, &[&l1, &l2]);
        report.check(&[&l12], Relation::AtMost, &[&l1, &l2]);
        report.check(&[&l12], Relation::Equal, &[&l1, &l2]);
    }
    Ok(report)
}

/// `htc_n(A ⊗ H(S^k)) = htc_n(A) + htc_n(S^k)` for `A` satisfying Poincaré duality.
pub fn verify_sphere_additivity(
    algebra: Arc<Cdga>,
    k: usize,
    n: usize,
    truncation: Option<usize>,
) -> Result<VerificationReport, InvariantError> {
    if k == 0 {
        return Err(InvariantError::InvalidParameter("sphere dimension must be positive".into()));
    }
    let sphere = Arc::new(catalog::cohomology_sphere(k));
    let product = Arc::new(algebra.tensor_product(&sphere));
    let mu = CdgaMorphism::multiplication(Arc::clone(&product), n)?;
    let trunc = truncation.unwrap_or_else(|| crate::invariants::default_truncation(&mu));
    if !pd_established(&algebra, trunc)? {
        return Err(InvariantError::PoincareDualityNotEstablished);
    }
    let mut report = new_report("sphere-additivity", format!("A: {algebra:?}; k: {k}; n: {n}"), trunc);
    let (la, ls, lp) = (format!("mtc_{n}(A)"), format!("mtc_{n}(S^{k})"), format!("mtc_{n}(A x S^{k})"));
    report.values.push(ReportValue::from_result(la.clone(), &htc(algebra, n, trunc)?));
    report.values.push(ReportValue::from_result(ls.clone(), &htc(sphere, n, trunc)?));
    report.values.push(ReportValue::from_result(lp.clone(), &htc(product, n, trunc)?));
    report.check(&[&lp], Relation::Equal, &[&la, &ls]);
    Ok(report)
}

/// Both reports for one random instance.
#[derive(Debug, Clone)]
pub struct InstanceOutcome {
    pub seed: u64,
    pub subadditivity: VerificationReport,
    pub lower_chain: VerificationReport,
}

impl InstanceOutcome {
    pub fn verdict(&self) -> Verdict {
        match (self.subadditivity.verdict(), self.lower_chain.verdict()) {
            (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
            (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
            _ => Verdict::Inconclusive,
        }
    }
}

pub fn verify_instance(seed: u64, params: &SizeParams) -> Result<InstanceOutcome, InvariantError> {
    let inst = random_instance(seed, params);
    let n = inst.truncation();
    let name = inst.describe();
    Ok(InstanceOutcome {
        seed,
        subadditivity: verify_subadditivity_named(&inst.phi1, &inst.phi2, n, name.clone())?,
        lower_chain: verify_lower_chain_named(&inst.phi1, &inst.phi2, n, name)?,
    })
}

/// Verifies every seed in parallel; results come back in seed order.
pub fn verify_batch(seeds: std::ops::Range<u64>, params: &SizeParams) -> Vec<Result<InstanceOutcome, InvariantError>> {
    seeds.into_par_iter().map(|seed| verify_instance(seed, params)).collect()
}

#[cfg(test)]
mod tests;
