use std::sync::Arc;

use crate::gca::{Cdga, CdgaMorphism, PolySpec};
use crate::linalg::q;

pub fn poly(terms: &[(i64, &[(&str, u32)])]) -> PolySpec {
    terms.iter().map(|(c, fs)| (q(*c), fs.iter().map(|(n, e)| (n.to_string(), *e)).collect())).collect()
}

/// Λ(x₂, y₃) with dy = x².
pub fn s2_model() -> Arc<Cdga> {
    Arc::new(
        Cdga::builder()
            .generator("x", 2)
            .generator("y", 3)
            .differential("y", poly(&[(1, &[("x", 2)])]))
            .build()
            .unwrap(),
    )
}

/// ℚ[x]/x^exp with x in the given degree.
pub fn truncated(degree: usize, exp: u32) -> Arc<Cdga> {
    Arc::new(Cdga::builder().generator("x", degree).relation(&[("x", exp)]).build().unwrap())
}

/// H(S^k) with zero differential.
pub fn sphere(k: usize) -> Arc<Cdga> {
    if k.is_multiple_of(2) {
        truncated(k, 2)
    } else {
        Arc::new(Cdga::builder().generator("x", k).build().unwrap())
    }
}

pub fn mult(a: &Arc<Cdga>, n: usize) -> CdgaMorphism {
    CdgaMorphism::multiplication(Arc::clone(a), n).unwrap()
}

pub fn aug(a: &Arc<Cdga>) -> CdgaMorphism {
    CdgaMorphism::augmentation(Arc::clone(a))
}
