use std::sync::Arc;

use super::catalog::{self, CatalogSpec};
use super::*;
use crate::cohomology::CohomologyRing;
use crate::gca::{Cdga, CdgaMorphism};
use crate::invariants::{check_poincare_duality, cup_length, hsecat, htc, Certification};
use crate::theorems::verify_subadditivity;

fn dims(a: &Cdga, n: usize) -> Vec<usize> {
    a.basis_up_to(n).iter().map(Vec::len).collect()
}

fn diagnostic(text: &str) -> Diagnostic {
    parse(text).expect_err("input should be rejected")
}

#[test]
fn ground_field_declaration() {
    let f = parse("algebra Q {}").unwrap();
    assert_eq!(*f.algebra("Q").unwrap().algebra, Cdga::ground_field());
}

#[test]
fn sullivan_model_of_s2() {
    let f = parse("algebra S2m { gen x:2; gen y:3; d y = x^2; }").unwrap();
    let a = &f.algebra("S2m").unwrap().algebra;
    assert_eq!(**a, catalog::sphere(2));
    assert_eq!(a.render(a.differential_of(a.position("y").unwrap())), "x^2");
}

#[test]
fn unlisted_generators_map_to_zero() {
    let f = parse("algebra CP2 { gen x:2; rel x^3; }  morphism aug : CP2 -> Q {}").unwrap();
    let m = &f.morphism("aug").unwrap().morphism;
    assert_eq!(*m, CdgaMorphism::augmentation(Arc::new(catalog::cpn(2))));
    assert_eq!(hsecat(m, 7).unwrap().value, 2);
}

#[test]
fn unlisted_generators_follow_matching_names() {
    let text = "algebra A { gen x:2; gen y:3; rel x^2; }\n\
                algebra B { gen x:2; gen y:4; rel x^2; }\n\
                morphism f : A -> B {}";
    let f = parse(text).unwrap();
    let m = &f.morphism("f").unwrap().morphism;
    let (src, tgt) = (m.source(), m.target());
    assert_eq!(tgt.render(&m.images()[src.position("x").unwrap()]), "x");
    assert!(m.images()[src.position("y").unwrap()].is_zero(), "degree differs, so y maps to 0");
}

#[test]
fn rationals_signs_and_comments() {
    let text = "# model with rational coefficients\n\
                algebra A {\n  gen a:1; gen b:1; gen c:2; # trailing\n  d c = 0;\n}\n\
                algebra B { gen u:2; gen v:2; }\n\
                morphism g : B -> B { u |-> -1/2*u + 3*v; v |-> v; }";
    let f = parse(text).unwrap();
    let g = &f.morphism("g").unwrap().morphism;
    let b = g.target();
    assert_eq!(b.render(&g.images()[b.position("u").unwrap()]), "-1/2*u + 3*v");
    assert!(f.algebra("A").unwrap().algebra.has_zero_differential());
}

#[test]
fn syntax_errors_are_located() {
    let d = diagnostic("algebra A {\n  gen x 2;\n}");
    assert_eq!((d.kind, d.at), (DiagnosticKind::Syntax, Location { line: 2, column: 9 }));
    assert!(!d.kind.is_validation());
    let d = diagnostic("algebra A { gen x:2; ");
    assert_eq!(d.kind, DiagnosticKind::Syntax);
    assert_eq!(diagnostic("morphism f A -> B {}").kind, DiagnosticKind::Syntax);
}

#[test]
fn unknown_identifiers() {
    let d = diagnostic("algebra A {\n  gen x:2;\n  d z = x;\n}");
    assert_eq!((d.kind, d.at.line), (DiagnosticKind::UnknownIdentifier, 3));
    let d = diagnostic("algebra A { gen x:2; }\nmorphism f : A -> Missing {}");
    assert_eq!((d.kind, d.at.line), (DiagnosticKind::UnknownIdentifier, 2));
    let d = diagnostic("algebra A { gen x:2; rel x^2*w; }");
    assert_eq!(d.kind, DiagnosticKind::UnknownIdentifier);
}

#[test]
fn duplicates() {
    assert_eq!(diagnostic("algebra A {} algebra A {}").kind, DiagnosticKind::DuplicateDefinition);
    assert_eq!(diagnostic("algebra A { gen x:2; gen x:3; }").kind, DiagnosticKind::DuplicateDefinition);
}

#[test]
fn degree_mismatches() {
    let d = diagnostic("algebra A {\n  gen x:2; gen y:3;\n  d y = x;\n}");
    assert_eq!((d.kind, d.at), (DiagnosticKind::DegreeMismatch, Location { line: 3, column: 9 }));
    assert!(d.kind.is_validation());
    let d = diagnostic("algebra A { gen x:2; }\nalgebra B { gen y:4; }\nmorphism f : A -> B { x |-> y; }");
    assert_eq!((d.kind, d.at.line), (DiagnosticKind::DegreeMismatch, 3));
}

#[test]
fn differential_must_square_to_zero() {
    let d = diagnostic("algebra A {\n  gen a:2; gen b:3; gen c:4;\n  d b = a^2;\n  d c = b*a;\n}");
    assert_eq!(d.kind, DiagnosticKind::DifferentialNotSquareZero);
    assert!(d.kind.is_validation());
}

#[test]
fn morphisms_must_commute_with_d() {
    let text = "algebra S2m { gen x:2; gen y:3; d y = x^2; }\n\
                algebra F { gen x:2; gen y:3; }\n\
                morphism f : S2m -> F {\n  x |-> x;\n  y |-> y;\n}";
    let d = diagnostic(text);
    assert_eq!(d.kind, DiagnosticKind::NotChainMap);
    assert_eq!(d.at.line, 5, "reported at the offending image line");
}

#[test]
fn oversized_inputs_are_refused() {
    assert_eq!(diagnostic("algebra A { gen x:100000; }").kind, DiagnosticKind::TooLarge);
    assert_eq!(diagnostic("algebra A { gen x:2; rel x^100000; }").kind, DiagnosticKind::TooLarge);
}

#[test]
fn element_parsing() {
    let a = catalog::cpn(3);
    let e = parse_element(&a, "2*x^2 - 1/3*x^2").unwrap();
    assert_eq!(a.render(&e), "5/3*x^2");
    assert_eq!(parse_element(&a, "y").unwrap_err().kind, DiagnosticKind::UnknownIdentifier);
}

fn catalog_entries() -> Vec<CatalogSpec> {
    let basic = vec![
        CatalogSpec::Point,
        CatalogSpec::Sphere(2),
        CatalogSpec::Sphere(3),
        CatalogSpec::Sphere(4),
        CatalogSpec::CohomologySphere(2),
        CatalogSpec::CohomologySphere(5),
        CatalogSpec::Cpn(1),
        CatalogSpec::Cpn(3),
    ];
    let mut out = basic.clone();
    out.push(CatalogSpec::Product(Box::new(basic[1].clone()), Box::new(basic[2].clone())));
    out.push(CatalogSpec::Product(Box::new(basic[7].clone()), Box::new(basic[4].clone())));
    out
}

#[test]
fn serialization_round_trips_on_catalog_entries() {
    for spec in catalog_entries() {
        let entry = spec.entry();
        let text = serialize_algebra("A", &entry.algebra);
        let once = parse(&text).unwrap_or_else(|e| panic!("{spec}: {e}\n{text}"));
        let again_text = serialize_file(&once);
        let twice = parse(&again_text).unwrap();
        assert_eq!(text, again_text, "{spec}");
        assert_eq!(once.algebras[0].algebra, twice.algebras[0].algebra, "{spec}");
        assert_eq!(dims(&once.algebras[0].algebra, 12), dims(&entry.algebra, 12), "{spec}");
    }
}

#[test]
fn morphisms_round_trip() {
    let a = Arc::new(catalog::cohomology_sphere(2));
    let mu = catalog::mult_model(Arc::clone(&a), 2).unwrap();
    let text = format!(
        "{}\n{}\n{}",
        serialize_algebra("A2", mu.source()),
        serialize_algebra("A", &a),
        serialize_morphism("mu", "A2", "A", &mu)
    );
    let once = parse(&text).unwrap();
    let twice = parse(&serialize_file(&once)).unwrap();
    let (m1, m2) = (&once.morphism("mu").unwrap().morphism, &twice.morphism("mu").unwrap().morphism);
    assert_eq!(m1, m2);
    assert_eq!(hsecat(m1, 5).unwrap().value, 2);
}

#[test]
fn reference_syntax() {
    let r = parse_reference("product(cpn:2, sphere:3)").unwrap();
    assert_eq!(r.to_string(), "product(cpn:2,sphere:3)");
    assert_eq!(parse_reference("mult(cohomology-sphere:2,3)").unwrap().to_string(), "mult(cohomology-sphere:2,3)");
    assert_eq!(parse_reference("aug(cpn:2").unwrap_err().column, 10);
    assert_eq!(parse_reference("sphere:2 x").unwrap_err().column, 10);
    assert!(parse_reference("sphere:999").is_err());
    assert!(parse_reference("").is_err());
    let deep = format!("{}point{}", "id(".repeat(40), ")".repeat(40));
    assert!(parse_reference(&deep).is_err());
}

#[test]
fn references_resolve_against_catalog_and_file() {
    let file = parse("algebra T { gen t:3; }\nmorphism e : T -> Q {}").unwrap();
    let r = Resolver::new(Some(&file));
    assert_eq!(*r.resolve_algebra("cpn:2").unwrap(), catalog::cpn(2));
    assert_eq!(dims(&r.resolve_algebra("T").unwrap(), 6), dims(&catalog::cohomology_sphere(3), 6));
    assert_eq!(*r.resolve_algebra("Q").unwrap(), Cdga::ground_field());
    let prod = r.resolve_algebra("product(sphere:2,T)").unwrap();
    assert_eq!(dims(&prod, 6), vec![1, 0, 1, 2, 1, 2, 2]);
    assert_eq!(hsecat(&r.resolve_morphism("e").unwrap(), 5).unwrap().value, 1);
    assert_eq!(hsecat(&r.resolve_morphism("aug(cpn:2)").unwrap(), 7).unwrap().value, 2);
    assert_eq!(hsecat(&r.resolve_morphism("id").unwrap(), 3).unwrap().value, 0);
    let mu = r.resolve_morphism("mult-model(cohomology-sphere:2,2)").unwrap();
    assert_eq!(**mu.target(), catalog::cohomology_sphere(2));
    assert!(r.resolve_algebra("torus:2").is_err());
    assert!(r.resolve_algebra("sphere:0").is_err());
    assert!(r.resolve_morphism("mult(cpn:2,0)").is_err());
    assert!(r.resolve_morphism("aug(cpn:2,cpn:3)").is_err());
    assert!(Resolver::new(None).resolve_algebra("T").is_err());
}

#[test]
fn catalog_values_match_computation() {
    for spec in catalog_entries() {
        let entry = spec.entry();
        let n = entry.algebra.default_truncation();
        let cl = cup_length(Arc::clone(&entry.algebra), n).unwrap();
        assert_eq!(Some(cl.value), entry.known("cup-length"), "{spec}");
        let pd = check_poincare_duality(Arc::clone(&entry.algebra), n).unwrap().is_pd;
        if pd && entry.algebra.has_zero_differential() {
            let top = entry.algebra.top_degree().unwrap();
            let r = htc(Arc::clone(&entry.algebra), 2, 2 * top + 1).unwrap();
            assert_eq!(r.status, Certification::CertifiedExact, "{spec}");
            assert_eq!(Some(r.value), entry.known("tc_2"), "{spec}");
        }
    }
}

#[test]
fn invariant_records_are_stable_json() {
    let a = Arc::new(catalog::cohomology_sphere(2));
    let r = htc(Arc::clone(&a), 2, 5).unwrap();
    assert_eq!(r.status, Certification::CertifiedExact);
    let line = emit_invariant("cohomology-sphere:2", &r, Format::Records);
    assert_eq!(line, emit_invariant("cohomology-sphere:2", &r, Format::Records));
    assert!(line.ends_with('\n') && line.matches('\n').count() == 1);
    let v: serde_json::Value = serde_json::from_str(&line).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["status"], "certified-exact");
    assert_eq!(v["truncation"], 5);
    assert_eq!(v["witness"], "(x@1 - 1@x)^2");
    let human = emit_invariant("cohomology-sphere:2", &r, Format::Human);
    assert!(human.contains("truncation  5"), "{human}");
}

#[test]
fn lower_bound_record_names_the_failing_level() {
    let a = Arc::new(catalog::sphere(2));
    let r = hsecat(&CdgaMorphism::augmentation(a), 12).unwrap();
    let v: serde_json::Value = serde_json::from_str(&emit_invariant("aug(sphere:2)", &r, Format::Records)).unwrap();
    assert_eq!(v["status"], "certified-lower-bound");
    assert_eq!(v["witness_level"], 0);
    assert_eq!(v["witness_degree"], 2);
}

#[test]
fn other_emitters() {
    let h = CohomologyRing::compute(Arc::new(catalog::cpn(2)), 6).unwrap();
    let v: serde_json::Value = serde_json::from_str(&emit_cohomology("cpn:2", &h, Format::Records)).unwrap();
    assert_eq!(v["dimensions"].as_array().unwrap().len(), 6);
    assert_eq!(v["products"][0]["product"], "x^2");
    assert!(emit_cohomology("cpn:2", &h, Format::Human).contains("[x]  *  [x]  =  x^2"));

    let pd = check_poincare_duality(Arc::new(catalog::cpn(2)), 6).unwrap();
    let v: serde_json::Value = serde_json::from_str(&emit_duality("cpn:2", &pd, Format::Records)).unwrap();
    assert_eq!(v["is_pd"], true);

    let id = CdgaMorphism::identity(Arc::new(Cdga::ground_field()));
    let report = verify_subadditivity(&id, &id, 3).unwrap();
    let v: serde_json::Value = serde_json::from_str(&emit_verification(&report, Format::Records)).unwrap();
    assert_eq!(v["verdict"], "pass");
    let mut summary = BatchSummary::default();
    summary.add(report.verdict());
    assert!(emit_verification_batch(&summary, Format::Human).starts_with("pass"));
    assert_eq!("records".parse::<Format>(), Ok(Format::Records));
    assert!("xml".parse::<Format>().is_err());
}
