use std::sync::Arc;

use super::*;
use crate::gca::CdgaMorphism;
use crate::invariants::Certification;
use crate::testkit::*;

fn values(r: &VerificationReport) -> Vec<(String, u32)> {
    r.values.iter().map(|v| (v.label.clone(), v.value)).collect()
}

#[test]
fn subadditivity_identities() {
    let id = CdgaMorphism::identity(sphere(2));
    let r = verify_subadditivity(&id, &id, 5).unwrap();
    assert_eq!(r.verdict(), Verdict::Pass);
    assert!(r.values.iter().all(|v| v.value == 0));
    assert_eq!(r.inclusions.len(), 2);
}

#[test]
fn subadditivity_two_even_spheres() {
    let r = verify_subadditivity(&aug(&sphere(2)), &aug(&sphere(2)), 5).unwrap();
    assert_eq!(r.value("hsecat(phi1 x phi2)").unwrap().value, 2);
    assert_eq!(r.checks[0].slack, 0);
    assert_eq!(r.verdict(), Verdict::Pass);
}

#[test]
fn subadditivity_sphere_multiplications() {
    let r = verify_subadditivity(&mult(&sphere(2), 2), &mult(&sphere(3), 2), 11).unwrap();
    assert_eq!(
        values(&r),
        vec![("hsecat(phi1)".into(), 2), ("hsecat(phi2)".into(), 1), ("hsecat(phi1 x phi2)".into(), 3)]
    );
    assert_eq!(r.verdict(), Verdict::Pass);
    assert!(r.inclusions.iter().all(InclusionCheck::holds));
}

#[test]
fn lower_chain_with_identity() {
    let r = verify_lower_chain(&aug(&sphere(3)), &CdgaMorphism::identity(sphere(2)), 6).unwrap();
    assert_eq!(r.value("msecat(phi1 x phi2)").unwrap().value, 1);
    assert_eq!(r.verdict(), Verdict::Pass);
}

#[test]
fn lower_chain_products_of_duality_bases() {
    let r = verify_lower_chain(&mult(&sphere(2), 2), &mult(&sphere(2), 2), 9).unwrap();
    assert_eq!(r.value("msecat(phi1 x phi2)").unwrap().value, 4);
    assert_eq!(r.checks.len(), 4);
    assert_eq!(r.verdict(), Verdict::Pass);

    let cp2 = truncated(2, 3);
    let r = verify_lower_chain(&mult(&cp2, 2), &mult(&sphere(3), 2), 15).unwrap();
    assert_eq!(r.value("msecat(phi1 x phi2)").unwrap().value, 5);
    assert_eq!(r.verdict(), Verdict::Pass);
}

#[test]
fn lower_chain_without_duality_uses_hsecat_labels() {
    let wedge = Arc::new(
        crate::gca::Cdga::builder()
            .generator("x", 2)
            .generator("y", 3)
            .relation(&[("x", 2)])
            .relation(&[("x", 1), ("y", 1)])
            .build()
            .unwrap(),
    );
    let r = verify_lower_chain(&aug(&wedge), &aug(&sphere(2)), 6).unwrap();
    assert!(r.value("hsecat(phi1)").is_some());
    assert_eq!(r.checks.len(), 1);
    assert_eq!(r.verdict(), Verdict::Pass);
}

#[test]
fn sullivan_inputs_are_not_refuted() {
    let r = verify_subadditivity(&aug(&s2_model()), &aug(&s2_model()), 10).unwrap();
    assert_eq!(r.value("hsecat(phi1)").unwrap().status, Certification::CertifiedLowerBound);
    assert_ne!(r.verdict(), Verdict::Fail);
    assert!(r.inclusions.is_empty());
}

#[test]
fn sphere_additivity() {
    let point = Arc::new(crate::gca::Cdga::ground_field());
    assert_eq!(verify_sphere_additivity(point, 3, 2, None).unwrap().verdict(), Verdict::Pass);
    let r = verify_sphere_additivity(sphere(2), 3, 2, None).unwrap();
    assert_eq!(values(&r), vec![("mtc_2(A)".into(), 2), ("mtc_2(S^3)".into(), 1), ("mtc_2(A x S^3)".into(), 3)]);
    assert_eq!(r.verdict(), Verdict::Pass);
    let r = verify_sphere_additivity(sphere(2), 2, 3, None).unwrap();
    assert_eq!(r.value("mtc_3(A x S^2)").unwrap().value, 6);
    assert_eq!(r.verdict(), Verdict::Pass);
    let free = Arc::new(crate::gca::Cdga::builder().generator("x", 2).build().unwrap());
    assert_eq!(
        verify_sphere_additivity(free, 2, 2, Some(12)).unwrap_err(),
        InvariantError::PoincareDualityNotEstablished
    );
}

#[test]
fn random_instances_are_deterministic() {
    let p = SizeParams::default();
    for seed in 0..10 {
        assert_eq!(random_instance(seed, &p).describe(), random_instance(seed, &p).describe());
    }
    assert_ne!(random_instance(1, &p).describe(), random_instance(2, &p).describe());
}

#[test]
fn minimal_instance_is_an_augmentation() {
    let inst = random_instance(0, &SizeParams::minimal());
    assert_eq!(inst.phi1.source().generators().len(), 1);
    assert_eq!(inst.phi1.target().generators().len(), 0);
}

#[test]
fn random_batch_passes() {
    let outcomes = verify_batch(0..12, &SizeParams::default());
    for (seed, o) in outcomes.into_iter().enumerate() {
        let o = o.unwrap();
        assert_eq!(o.seed, seed as u64);
        assert_eq!(o.verdict(), Verdict::Pass, "{:?}", o);
    }
}

#[test]
fn swapping_factors_keeps_values() {
    let p = SizeParams::default();
    for seed in 20..26 {
        let inst = random_instance(seed, &p);
        let n = inst.truncation();
        let ab = verify_subadditivity(&inst.phi1, &inst.phi2, n).unwrap();
        let ba = verify_subadditivity(&inst.phi2, &inst.phi1, n).unwrap();
        assert_eq!(ab.value("hsecat(phi1 x phi2)").unwrap().value, ba.value("hsecat(phi1 x phi2)").unwrap().value);
        assert_eq!(ab.value("hsecat(phi1)").unwrap().value, ba.value("hsecat(phi2)").unwrap().value);
    }
}
