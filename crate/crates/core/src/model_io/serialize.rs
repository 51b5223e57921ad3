use std::fmt::Write;

use super::ModelFile;
use crate::gca::{Cdga, CdgaMorphism, NameStyle};

/// Canonical positions of the generators, in declaration order.
fn declared_positions(a: &Cdga) -> Vec<usize> {
    a.generators_in_declaration_order()
        .iter()
        .map(|g| a.position_in_slot(&g.name, g.slot).expect("generator of the algebra"))
        .collect()
}

/// Model-file text for `a`; tensor slots become `_1`, `_2`, … suffixes.
pub fn serialize_algebra(name: &str, a: &Cdga) -> String {
    let mut out = format!("algebra {name} {{\n");
    let positions = declared_positions(a);
    for &pos in &positions {
        writeln!(out, "  gen {}:{};", a.model_name(pos), a.generators()[pos].degree).unwrap();
    }
    for &pos in &positions {
        let d = a.differential_of(pos);
        if !d.is_zero() {
            writeln!(out, "  d {} = {};", a.model_name(pos), a.render_with(d, NameStyle::Mangled)).unwrap();
        }
    }
    for r in a.relations() {
        writeln!(out, "  rel {};", a.render_monomial(r, NameStyle::Mangled)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Every source generator gets an explicit image line.
pub fn serialize_morphism(name: &str, source: &str, target: &str, phi: &CdgaMorphism) -> String {
    let mut out = format!("morphism {name} : {source} -> {target} {{\n");
    let src = phi.source();
    for pos in declared_positions(src) {
        let image = phi.target().render_with(&phi.images()[pos], NameStyle::Mangled);
        writeln!(out, "  {} |-> {};", src.model_name(pos), image).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn serialize_file(file: &ModelFile) -> String {
    let mut parts: Vec<String> = file.algebras.iter().map(|a| serialize_algebra(&a.name, &a.algebra)).collect();
    parts.extend(file.morphisms.iter().map(|m| serialize_morphism(&m.name, &m.source, &m.target, &m.morphism)));
    parts.join("\n")
}
