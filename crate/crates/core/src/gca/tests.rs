use std::sync::Arc;

use super::*;
use crate::linalg::{q, Q};

fn poly(terms: &[(i64, &[(&str, u32)])]) -> PolySpec {
    terms.iter().map(|(c, fs)| (q(*c), fs.iter().map(|(n, e)| (n.to_string(), *e)).collect())).collect()
}

fn s2_model() -> Cdga {
    Cdga::builder().generator("x", 2).generator("y", 3).differential("y", poly(&[(1, &[("x", 2)])])).build().unwrap()
}

fn truncated(gen: &str, degree: usize, exp: u32) -> Cdga {
    Cdga::builder().generator(gen, degree).relation(&[(gen, exp)]).build().unwrap()
}

fn exterior(gen: &str, degree: usize) -> Cdga {
    Cdga::builder().generator(gen, degree).build().unwrap()
}

fn dims(a: &Cdga, n: usize) -> Vec<(usize, usize)> {
    a.basis_up_to(n).iter().enumerate().filter(|(_, b)| !b.is_empty()).map(|(k, b)| (k, b.len())).collect()
}

fn rendered_basis(a: &Cdga, n: usize) -> Vec<(usize, Vec<String>)> {
    a.basis_up_to(n)
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_empty())
        .map(|(k, b)| (k, b.iter().map(|m| a.render_monomial(m, NameStyle::Plain)).collect()))
        .collect()
}

#[test]
fn basis_polynomial_even() {
    let a = Cdga::builder().generator("x", 2).build().unwrap();
    assert_eq!(rendered_basis(&a, 5), vec![(0, vec!["1".into()]), (2, vec!["x".into()]), (4, vec!["x^2".into()])]);
}

#[test]
fn basis_exterior_odd() {
    let a = exterior("y", 3);
    assert_eq!(rendered_basis(&a, 9), vec![(0, vec!["1".into()]), (3, vec!["y".into()])]);
}

#[test]
fn basis_free_two_generators() {
    let a = s2_model();
    let expected: Vec<(usize, Vec<String>)> = vec![
        (0, vec!["1".into()]),
        (2, vec!["x".into()]),
        (3, vec!["y".into()]),
        (4, vec!["x^2".into()]),
        (5, vec!["x*y".into()]),
        (6, vec!["x^3".into()]),
        (7, vec!["x^2*y".into()]),
    ];
    assert_eq!(rendered_basis(&a, 7), expected);
}

#[test]
fn basis_is_deterministic() {
    let a = s2_model().tensor_product(&truncated("z", 2, 3));
    assert_eq!(a.basis_up_to(12), a.basis_up_to(12));
}

#[test]
fn odd_square_is_zero() {
    let a = exterior("x", 3);
    let x = a.generator_by_name("x").unwrap();
    assert!(a.multiply(&x, &x).unwrap().is_zero());
}

#[test]
fn odd_transposition_sign() {
    let a = Cdga::builder().generator("x", 1).generator("y", 1).build().unwrap();
    let x = a.generator_by_name("x").unwrap();
    let y = a.generator_by_name("y").unwrap();
    let yx = a.multiply(&y, &x).unwrap();
    let xy = a.multiply(&x, &y).unwrap();
    assert_eq!(yx, xy.negated());
    assert_eq!(a.render(&xy), "x*y");
}

#[test]
fn zero_divisor_square_in_sphere_tensor() {
    let h = truncated("x", 2, 2);
    let t = TensorProduct::new(&h, &h);
    let x = h.generator_by_name("x").unwrap();
    let zd = t.include_left(&x).unwrap().try_sub(&t.include_right(&x).unwrap()).unwrap();
    assert_eq!(t.product.render(&zd), "x@1 - 1@x");
    let sq = t.product.multiply(&zd, &zd).unwrap();
    let xx = t.tensor(&x, &x).unwrap();
    assert_eq!(sq, xx.scaled(&q(-2)));
}

#[test]
fn multiply_rejects_foreign_elements() {
    let a = exterior("x", 3);
    let b = truncated("x", 2, 3);
    let x = a.generator_by_name("x").unwrap();
    let y = b.generator_by_name("x").unwrap();
    assert_eq!(a.multiply(&x, &y), Err(AlgebraError::MismatchedAlgebras));
}

#[test]
fn differential_examples() {
    let a = s2_model();
    let x = a.generator_by_name("x").unwrap();
    let y = a.generator_by_name("y").unwrap();
    assert!(a.apply_differential(&x).unwrap().is_zero());
    let x2 = a.multiply(&x, &x).unwrap();
    assert_eq!(a.apply_differential(&y).unwrap(), x2);
    let xy = a.multiply(&x, &y).unwrap();
    let x3 = a.multiply(&x2, &x).unwrap();
    assert_eq!(a.apply_differential(&xy).unwrap(), x3);
}

#[test]
fn construction_rejects_bad_differentials() {
    // d y = x has the wrong degree
    let err = Cdga::builder().generator("x", 2).generator("y", 3).differential("y", poly(&[(1, &[("x", 1)])])).build();
    assert!(matches!(err, Err(AlgebraError::DegreeMismatch { .. })));
    // d z = y with d y = x^2 is not square-zero
    let err = Cdga::builder()
        .generator("x", 2)
        .generator("y", 3)
        .generator("z", 2)
        .differential("y", poly(&[(1, &[("x", 2)])]))
        .differential("z", poly(&[(1, &[("y", 1)])]))
        .build();
    assert!(matches!(err, Err(AlgebraError::DifferentialNotSquareZero(g)) if g == "z"));
    // relation x^2 with d y = x is stable, relation y alone is not
    let err = Cdga::builder()
        .generator("x", 2)
        .generator("y", 1)
        .relation(&[("y", 1)])
        .differential("y", poly(&[(1, &[("x", 1)])]))
        .build();
    assert!(matches!(err, Err(AlgebraError::RelationNotStable(_))));
    assert!(matches!(
        Cdga::builder().generator("x", 2).generator("x", 3).build(),
        Err(AlgebraError::DuplicateGenerator(_))
    ));
    assert!(matches!(Cdga::builder().generator("x", 0).build(), Err(AlgebraError::ZeroDegreeGenerator(_))));
}

#[test]
fn tensor_with_ground_field_is_identity_on_dimensions() {
    let b = s2_model();
    let t = Cdga::ground_field().tensor_product(&b);
    assert_eq!(dims(&t, 12), dims(&b, 12));
}

#[test]
fn tensor_dimension_examples() {
    let s2 = truncated("x", 2, 2);
    let s3 = exterior("y", 3);
    assert_eq!(dims(&s2.tensor_product(&s3), 10), vec![(0, 1), (2, 1), (3, 1), (5, 1)]);
    assert_eq!(dims(&s2.tensor_product(&s2), 10), vec![(0, 1), (2, 2), (4, 1)]);
}

#[test]
fn tensor_power_examples() {
    let s2 = truncated("x", 2, 2);
    let s3 = exterior("y", 3);
    assert_eq!(s2.tensor_power(1).unwrap(), s2);
    assert_eq!(dims(&s3.tensor_power(2).unwrap(), 10), vec![(0, 1), (3, 2), (6, 1)]);
    assert_eq!(dims(&s2.tensor_power(3).unwrap(), 10), vec![(0, 1), (2, 3), (4, 3), (6, 1)]);
    assert_eq!(s2.tensor_power(0), Err(AlgebraError::InvalidTensorPower(0)));
}

/// `dim (A⊗B)_n = Σ_i dim A_i · dim B_{n-i}`
#[test]
fn tensor_dimension_convolution() {
    let cases =
        [(s2_model(), truncated("z", 2, 3)), (exterior("y", 3), exterior("w", 5)), (truncated("x", 2, 4), s2_model())];
    for (a, b) in cases {
        let n = 14;
        let da: Vec<usize> = a.basis_up_to(n).iter().map(Vec::len).collect();
        let db: Vec<usize> = b.basis_up_to(n).iter().map(Vec::len).collect();
        let dt: Vec<usize> = a.tensor_product(&b).basis_up_to(n).iter().map(Vec::len).collect();
        for k in 0..=n {
            let conv: usize = (0..=k).map(|i| da[i] * db[k - i]).sum();
            assert_eq!(dt[k], conv, "degree {k}");
        }
    }
}

#[test]
fn morphism_examples() {
    let a = Arc::new(s2_model());
    let id = CdgaMorphism::identity(Arc::clone(&a));
    let x = a.generator_by_name("x").unwrap();
    let u = a.one().try_add(&x.scaled(&q(3))).unwrap();
    assert_eq!(id.apply(&u).unwrap(), u);

    let eps = CdgaMorphism::augmentation(Arc::clone(&a));
    assert_eq!(eps.apply(&u).unwrap(), eps.target().one());

    let h = Arc::new(truncated("x", 2, 2));
    let mu = CdgaMorphism::multiplication(Arc::clone(&h), 2).unwrap();
    let t = TensorProduct::new(&h, &h);
    let hx = h.generator_by_name("x").unwrap();
    let zd = t.include_left(&hx).unwrap().try_sub(&t.include_right(&hx).unwrap()).unwrap();
    assert!(mu.apply(&zd).unwrap().is_zero());
    assert!(eps.apply(&h.one()).is_err());
}

#[test]
fn tensor_morphism_examples() {
    let s2 = Arc::new(truncated("x", 2, 2));
    let s3 = Arc::new(exterior("y", 3));
    let id = CdgaMorphism::identity(Arc::clone(&s2)).tensor(&CdgaMorphism::identity(Arc::clone(&s3))).unwrap();
    assert_eq!(id, CdgaMorphism::identity(Arc::clone(id.source())));

    let ee = CdgaMorphism::augmentation(Arc::clone(&s2)).tensor(&CdgaMorphism::augmentation(Arc::clone(&s3))).unwrap();
    let prod = Arc::new(s2.tensor_product(&s3));
    assert_eq!(ee, CdgaMorphism::augmentation(prod));

    let mm = CdgaMorphism::multiplication(Arc::clone(&s2), 2)
        .unwrap()
        .tensor(&CdgaMorphism::multiplication(Arc::clone(&s3), 2).unwrap())
        .unwrap();
    // (x⊗1 − 1⊗x) ⊗ 1 ⊗ 1 has generators x_1, x_2 in the first two slots
    let src = mm.source();
    let x1 = src.generator_element(src.position_in_slot("x", 0).unwrap());
    let x2 = src.generator_element(src.position_in_slot("x", 1).unwrap());
    let zd = x1.try_sub(&x2).unwrap();
    assert_eq!(src.render(&zd), "x@1@1@1 - 1@x@1@1");
    assert!(mm.apply(&zd).unwrap().is_zero());
}

#[test]
fn morphism_validation() {
    let cp2 = Arc::new(truncated("x", 2, 3));
    let s2 = Arc::new(truncated("x", 2, 2));
    // x ↦ x does not respect x^2 = 0 → x^2 ≠ 0 in the wrong direction
    let bad = CdgaMorphism::new(Arc::clone(&s2), Arc::clone(&cp2), vec![cp2.generator_by_name("x").unwrap()]);
    assert!(matches!(bad, Err(AlgebraError::RelationNotPreserved(_))));
    let good = CdgaMorphism::new(Arc::clone(&cp2), Arc::clone(&s2), vec![s2.generator_by_name("x").unwrap()]);
    assert!(good.is_ok());
    let wrong_degree = CdgaMorphism::new(Arc::clone(&cp2), Arc::clone(&s2), vec![s2.one()]);
    assert!(matches!(wrong_degree, Err(AlgebraError::DegreeMismatch { .. })));

    // S² model → (H(S²), 0) with x ↦ x is not a chain map: d y = x² ↦ 0 but y has no image
    // of degree 3, so y ↦ 0 and φ(dy) = x² = 0 in H(S²): fine; map into ℚ[x] instead fails
    let poly_ring = Arc::new(Cdga::builder().generator("x", 2).build().unwrap());
    let model = Arc::new(s2_model());
    let not_chain = CdgaMorphism::new(
        Arc::clone(&model),
        Arc::clone(&poly_ring),
        vec![poly_ring.generator_by_name("x").unwrap(), poly_ring.zero()],
    );
    assert!(matches!(not_chain, Err(AlgebraError::NotChainMap(_))));
    let chain = CdgaMorphism::new(model, Arc::clone(&s2), vec![s2.generator_by_name("x").unwrap(), s2.zero()]);
    assert!(chain.is_ok());
}

#[test]
fn surjectivity_check() {
    let cp2 = Arc::new(truncated("x", 2, 3));
    let eps = CdgaMorphism::augmentation(Arc::clone(&cp2));
    assert_eq!(first_non_surjective_degree(&eps, 6), None);
    let incl = CdgaMorphism::new(Arc::new(Cdga::ground_field()), Arc::clone(&cp2), vec![]).unwrap();
    assert_eq!(first_non_surjective_degree(&incl, 6), Some(2));
}

#[test]
fn top_degree_and_default_truncation() {
    assert_eq!(truncated("x", 2, 3).top_degree(), Some(4));
    assert_eq!(exterior("y", 3).top_degree(), Some(3));
    assert_eq!(s2_model().top_degree(), None);
    assert_eq!(Cdga::ground_field().top_degree(), Some(0));
    assert_eq!(s2_model().default_truncation(), 24);
    let big = truncated("x", 2, 30);
    assert_eq!(big.default_truncation(), 59);
}

fn all_monomial_elements(a: &Cdga, n: usize) -> Vec<Element> {
    a.basis_up_to(n).into_iter().flatten().map(|m| a.monomial_element(&m)).collect()
}

fn sign(d1: usize, d2: usize) -> Q {
    if d1 * d2 % 2 == 1 {
        q(-1)
    } else {
        q(1)
    }
}

fn property_algebras() -> Vec<Cdga> {
    vec![
        s2_model(),
        truncated("x", 2, 3).tensor_product(&exterior("y", 3)),
        Cdga::builder()
            .generator("a", 1)
            .generator("b", 1)
            .generator("c", 1)
            .generator("e", 3)
            .differential("c", poly(&[(1, &[("a", 1), ("b", 1)])]))
            .build()
            .unwrap(),
        exterior("y", 3).tensor_power(3).unwrap(),
    ]
}

#[test]
fn graded_commutativity_on_basis() {
    for a in property_algebras() {
        let n = 10;
        let elems = all_monomial_elements(&a, n / 2);
        for u in &elems {
            for v in &elems {
                let uv = a.multiply(u, v).unwrap();
                let vu = a.multiply(v, u).unwrap();
                let (du, dv) = (u.degree().unwrap(), v.degree().unwrap());
                assert_eq!(uv, vu.scaled(&sign(du, dv)), "{} * {}", a.render(u), a.render(v));
            }
        }
    }
}

#[test]
fn associativity_on_basis() {
    for a in property_algebras() {
        let elems = all_monomial_elements(&a, 4);
        for u in &elems {
            for v in &elems {
                for w in &elems {
                    let l = a.multiply(&a.multiply(u, v).unwrap(), w).unwrap();
                    let r = a.multiply(u, &a.multiply(v, w).unwrap()).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }
}

#[test]
fn differential_squares_to_zero_on_basis() {
    for a in property_algebras() {
        for u in all_monomial_elements(&a, 10) {
            let dd = a.apply_differential(&a.apply_differential(&u).unwrap()).unwrap();
            assert!(dd.is_zero(), "d² {}", a.render(&u));
        }
    }
}

#[test]
fn leibniz_on_basis_pairs() {
    for a in property_algebras() {
        let elems = all_monomial_elements(&a, 6);
        for u in &elems {
            for v in &elems {
                let lhs = a.apply_differential(&a.multiply(u, v).unwrap()).unwrap();
                let du = a.apply_differential(u).unwrap();
                let dv = a.apply_differential(v).unwrap();
                let r1 = a.multiply(&du, v).unwrap();
                let r2 = a.multiply(u, &dv).unwrap().scaled(&sign(u.degree().unwrap(), 1));
                assert_eq!(lhs, r1.try_add(&r2).unwrap());
            }
        }
    }
}
