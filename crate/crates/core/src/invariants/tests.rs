use std::sync::Arc;

use super::*;
use crate::cohomology::GradedRing;
use crate::gca::{Cdga, CdgaMorphism, TruncatedAlgebra};
use crate::testkit::*;

fn cp(n: u32) -> Arc<Cdga> {
    truncated(2, n + 1)
}

fn wedge_s2_s3() -> Arc<Cdga> {
    Arc::new(
        Cdga::builder()
            .generator("x", 2)
            .generator("y", 3)
            .relation(&[("x", 2)])
            .relation(&[("x", 1), ("y", 1)])
            .build()
            .unwrap(),
    )
}

fn s2_s3() -> Arc<Cdga> {
    Arc::new(sphere(2).tensor_product(&sphere(3)))
}

fn exact(n: u32) -> impl Fn(InvariantResult) {
    move |r| {
        assert_eq!(r.value, n, "{r:?}");
        assert!(r.status.is_exact(), "{r:?}");
    }
}

/// nil of `ker φ` taken inside `A` itself.
fn algebra_kernel_nil(phi: &CdgaMorphism, n: usize) -> u32 {
    let src = TruncatedAlgebra::new(Arc::clone(phi.source()), n);
    let tgt = TruncatedAlgebra::new(Arc::clone(phi.target()), n);
    crate::cohomology::algebra_kernel(phi, &src, &tgt).unwrap().nilpotency("nil").value
}

#[test]
fn hsecat_identity_and_point() {
    exact(0)(hsecat(&CdgaMorphism::identity(sphere(2)), 5).unwrap());
    exact(0)(hsecat(&aug(&Arc::new(Cdga::ground_field())), 3).unwrap());
    let r = hsecat(&CdgaMorphism::identity(s2_model()), 10).unwrap();
    assert_eq!(r.value, 0);
    assert!(r.failures.is_empty() && r.witness.is_none());
}

#[test]
fn hsecat_augmentation_of_sphere() {
    let r = hsecat(&aug(&sphere(2)), 5).unwrap();
    exact(1)(r.clone());
    let w = r.witness.unwrap();
    assert_eq!((w.level(), w.degree(), w.rendered()), (Some(0), 2, "x"));
}

#[test]
fn hsecat_multiplication_of_sphere() {
    let r = hsecat(&mult(&sphere(2), 2), 5).unwrap();
    exact(2)(r.clone());
    assert_eq!(r.failures.len(), 2);
    assert_eq!(r.failures[0].rendered(), "x@1 - 1@x");
    assert_eq!(r.witness.unwrap().rendered(), "(x@1 - 1@x)^2");
}

#[test]
fn hsecat_sullivan_sphere_is_a_lower_bound() {
    let r = hsecat(&aug(&s2_model()), 12).unwrap();
    assert_eq!(r.value, 1);
    assert_eq!(r.status, Certification::CertifiedLowerBound);
    assert_eq!(r.failures.len(), 1);
    assert_eq!((r.failures[0].level(), r.failures[0].degree()), (Some(0), 2));
}

#[test]
fn hsecat_refuses_non_surjective_maps() {
    let target = s2_s3();
    let include = CdgaMorphism::new(sphere(2), Arc::clone(&target), vec![target.generator_element(0)]).unwrap();
    assert_eq!(hsecat(&include, 6).unwrap_err(), InvariantError::NotSurjective { degree: 3 });
    assert_eq!(nil_ker_h(&include, 6).unwrap().value, 0);
}

#[test]
fn quotient_by_squares() {
    let q = quotient_rho(&aug(&truncated(2, 3)), 1, 6).unwrap();
    assert_eq!(q.basis_rendered(0), vec!["1"]);
    assert_eq!(q.basis_rendered(2), vec!["x"]);
    assert!(q.basis_rendered(4).is_empty());
    assert!((0..6).all(|k| q.dbar(k).unwrap().is_zero()));

    let q = quotient_rho(&aug(&s2_model()), 1, 10).unwrap();
    let nonzero: Vec<(usize, Vec<String>)> =
        (0..=10).map(|k| (k, q.basis_rendered(k))).filter(|(_, b)| !b.is_empty()).collect();
    assert_eq!(nonzero, vec![(0, vec!["1".into()]), (2, vec!["x".into()]), (3, vec!["y".into()])]);
    assert!((0..10).all(|k| q.dbar(k).unwrap().is_zero()));

    assert!(quotient_rho(&aug(&truncated(2, 3)), 2, 6).unwrap().is_identity());
    let q0 = quotient_rho(&aug(&truncated(2, 3)), 0, 6).unwrap();
    assert_eq!((0..=6).map(|k| q0.dim(k)).sum::<usize>(), 1);
}

#[test]
fn projection_is_a_chain_map_and_multiplicative() {
    let mu = mult(&s2_model(), 2);
    let n = 9;
    for m in 0..3 {
        let q = quotient_rho(&mu, m, n).unwrap();
        let a = q.parent();
        for k in 0..n {
            let lhs = q.projection_matrix(k + 1);
            let d = a.differential_matrix(k).unwrap();
            let dbar = q.dbar(k).unwrap();
            for i in 0..a.dim(k) {
                let v = crate::linalg::unit_vec(i);
                let via_d = lhs.apply(&d.apply(&v).unwrap()).unwrap();
                let via_dbar = dbar.apply(&q.project(k, &v)).unwrap();
                assert_eq!(via_d, via_dbar);
            }
        }
        for i in 0..=4 {
            for j in 0..=4 {
                for u in 0..a.dim(i) {
                    for v in 0..a.dim(j) {
                        let (u, v) = (crate::linalg::unit_vec(u), crate::linalg::unit_vec(v));
                        let lhs = q.project(i + j, &a.multiply_coords(i, &u, j, &v));
                        let rhs = q.multiply(i, &q.project(i, &u), j, &q.project(j, &v));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn nil_ker_h_values() {
    exact(0)(nil_ker_h(&CdgaMorphism::identity(sphere(2)), 4).unwrap());
    for n in 1..5 {
        exact(n)(nil_ker_h(&aug(&cp(n)), 2 * n as usize + 1).unwrap());
    }
    exact(1)(nil_ker_h(&mult(&sphere(3), 2), 7).unwrap());
}

#[test]
fn cup_lengths() {
    exact(0)(cup_length(Arc::new(Cdga::ground_field()), 2).unwrap());
    for k in 1..6 {
        exact(1)(cup_length(sphere(k), k + 1).unwrap());
    }
    exact(3)(cup_length(cp(3), 7).unwrap());
    let r = cup_length(s2_model(), 12).unwrap();
    assert_eq!(r.value, 1);
    assert_eq!(r.name, "cup-length");
}

#[test]
fn higher_topological_complexity() {
    exact(1)(htc(sphere(3), 2, 7).unwrap());
    exact(2)(htc(sphere(2), 2, 5).unwrap());
    exact(3)(htc(sphere(2), 3, 7).unwrap());
    exact(2)(htc(sphere(3), 3, 10).unwrap());
    assert_eq!(htc(sphere(2), 1, 5).unwrap_err(), InvariantError::InvalidTensorPower(1));
    assert_eq!(htc(sphere(2), 2, 5).unwrap().name, "htc_2");
}

#[test]
fn htc_grows_with_n() {
    for a in [sphere(2), sphere(3), cp(2)] {
        let top = a.top_degree().unwrap();
        let values: Vec<u32> = (2..=4).map(|n| htc(Arc::clone(&a), n, n * top + 1).unwrap().value).collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]), "{values:?}");
    }
}

#[test]
fn zero_differential_hsecat_is_kernel_nilpotency() {
    let algebras = [sphere(2), sphere(3), cp(2), s2_s3(), wedge_s2_s3()];
    for a in &algebras {
        let top = a.top_degree().unwrap();
        for phi in [aug(a), mult(a, 2), CdgaMorphism::identity(Arc::clone(a))] {
            let n = phi.source().top_degree().unwrap() + 1;
            assert_eq!(hsecat(&phi, n).unwrap().value, algebra_kernel_nil(&phi, n), "{a:?}");
        }
        let mu3 = mult(a, 3);
        assert_eq!(hsecat(&mu3, 3 * top + 1).unwrap().value, algebra_kernel_nil(&mu3, 3 * top + 1));
    }
}

#[test]
fn injectivity_is_monotone_and_witnesses_check_out() {
    for (phi, n) in [(mult(&s2_model(), 2), 11), (aug(&s2_model()), 12), (mult(&cp(2), 2), 9)] {
        let r = hsecat(&phi, n).unwrap();
        let src = Arc::new(TruncatedAlgebra::new(Arc::clone(phi.source()), n));
        let h = crate::cohomology::CohomologyRing::from_truncated(Arc::clone(&src)).unwrap();
        for m in r.value..r.value + 2 {
            let q = quotient_rho(&phi, m, n).unwrap();
            assert!((0..n).all(|k| q.homology_kernel(k, &h).dim() == 0));
        }
        for w in &r.failures {
            let Witness::InjectivityFailure { level, degree, cycle, factors, .. } = w else { panic!() };
            assert!(h.cycles(*degree).contains(cycle).unwrap());
            assert!(!h.boundaries(*degree).contains(cycle).unwrap());
            let q = quotient_rho(&phi, *level, n).unwrap();
            assert!(q.cycles_killed(*degree, &h).contains(cycle).unwrap());
            if let Some(fs) = factors {
                let mut prod = crate::linalg::unit_vec(0);
                let mut deg = 0;
                for f in fs {
                    prod = src.multiply_coords(deg, &prod, f.degree, &f.vector);
                    deg += f.degree;
                }
                assert_eq!(&prod, cycle);
            }
        }
    }
}

#[test]
fn kernel_dimension_oracle() {
    // dim ker H(ρ_m) in degree k = dim(Z ∩ (B + P)) − dim B.
    let phi = mult(&s2_model(), 2);
    let n = 10;
    let src = Arc::new(TruncatedAlgebra::new(Arc::clone(phi.source()), n));
    let h = crate::cohomology::CohomologyRing::from_truncated(Arc::clone(&src)).unwrap();
    for m in 0..3 {
        let q = quotient_rho(&phi, m, n).unwrap();
        for k in 0..n {
            let bp = h.boundaries(k).sum(q.ideal_part(k)).unwrap();
            let expected = h.cycles(k).intersection(&bp).unwrap().dim() - h.boundaries(k).dim();
            assert_eq!(q.homology_kernel(k, &h).dim(), expected);
        }
    }
}

#[test]
fn stable_under_truncation() {
    for a in [sphere(2), cp(2), s2_s3()] {
        let mu = mult(&a, 2);
        let top = mu.source().top_degree().unwrap();
        let values: Vec<(u32, bool)> =
            (top + 1..top + 4).map(|n| hsecat(&mu, n).map(|r| (r.value, r.status.is_exact())).unwrap()).collect();
        assert!(values.iter().all(|v| *v == values[0] && v.1), "{values:?}");
    }
}

#[test]
fn poincare_duality_detection() {
    for n in 1..4u32 {
        let r = check_poincare_duality(cp(n), 2 * n as usize + 1).unwrap();
        assert!(r.is_pd);
        assert_eq!(r.formal_dimension, Some(2 * n as usize));
        assert_eq!(r.finiteness, Finiteness::Complete);
    }
    let r = check_poincare_duality(s2_s3(), 6).unwrap();
    assert!(r.is_pd);
    assert_eq!(r.formal_dimension, Some(5));
    assert_eq!(r.fundamental_class.as_deref(), Some("x@x"));
    assert!(r.pairing_ranks.iter().all(|p| p.rank == p.dims.0));

    let r = check_poincare_duality(wedge_s2_s3(), 6).unwrap();
    assert!(!r.is_pd && r.is_conclusive());
    assert_eq!(r.formal_dimension, Some(3));

    let r = check_poincare_duality(s2_model(), 12).unwrap();
    assert_eq!(r.finiteness, Finiteness::Detected);
    assert!(r.is_pd);
    let free = Arc::new(Cdga::builder().generator("x", 2).build().unwrap());
    let r = check_poincare_duality(free, 12).unwrap();
    assert_eq!(r.finiteness, Finiteness::Undetermined);
    assert!(!r.is_pd);
}

#[test]
fn msecat_on_duality_bases() {
    let r = msecat_pd(&mult(&sphere(2), 2), 5).unwrap();
    exact(2)(r.clone());
    assert_eq!(r.name, "msecat");
    assert!(r.note.is_some());
    exact(4)(msecat_pd(&mult(&cp(2), 2), 9).unwrap());
    exact(1)(msecat_pd(&aug(&sphere(3)), 4).unwrap());
    assert_eq!(msecat_pd(&aug(&wedge_s2_s3()), 6).unwrap_err(), InvariantError::PoincareDualityNotEstablished);
}
