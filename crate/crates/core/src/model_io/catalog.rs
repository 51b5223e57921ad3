//! Standard models: spheres, complex projective spaces and their products.

use std::fmt;
use std::sync::Arc;

use crate::gca::{Cdga, CdgaMorphism};
use crate::linalg::q;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogSpec {
    Point,
    /// Minimal Sullivan model of `S^k`.
    Sphere(usize),
    /// `H(S^k)` with zero differential.
    CohomologySphere(usize),
    /// `ℚ[x]/x^{n+1}`, `x` in degree 2.
    Cpn(usize),
    Product(Box<CatalogSpec>, Box<CatalogSpec>),
}

/// An invariant of the modeled space, known independently of this crate's computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownValue {
    pub invariant: String,
    pub value: u32,
    pub note: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub spec: CatalogSpec,
    pub algebra: Arc<Cdga>,
    pub known: Vec<KnownValue>,
}

impl CatalogEntry {
    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn known(&self, invariant: &str) -> Option<u32> {
        self.known.iter().find(|k| k.invariant == invariant).map(|k| k.value)
    }
}

impl fmt::Display for CatalogSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogSpec::Point => write!(f, "point"),
            CatalogSpec::Sphere(k) => write!(f, "sphere:{k}"),
            CatalogSpec::CohomologySphere(k) => write!(f, "cohomology-sphere:{k}"),
            CatalogSpec::Cpn(n) => write!(f, "cpn:{n}"),
            CatalogSpec::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

impl CatalogSpec {
    pub fn from_name(name: &str, param: Option<usize>) -> Result<Self, CatalogError> {
        let needs = |p: Option<usize>, min: usize| match p {
            Some(v) if v >= min => Ok(v),
            Some(v) => Err(CatalogError::InvalidParameter {
                name: name.to_string(),
                reason: format!("{v} is below the minimum {min}"),
            }),
            None => Err(CatalogError::InvalidParameter { name: name.to_string(), reason: "missing parameter".into() }),
        };
        match name {
            "point" if param.is_none() => Ok(CatalogSpec::Point),
            "point" => Err(CatalogError::InvalidParameter { name: name.into(), reason: "takes no parameter".into() }),
            "sphere" => Ok(CatalogSpec::Sphere(needs(param, 1)?)),
            "cohomology-sphere" => Ok(CatalogSpec::CohomologySphere(needs(param, 1)?)),
            "cpn" => Ok(CatalogSpec::Cpn(needs(param, 1)?)),
            _ => Err(CatalogError::UnknownName(name.to_string())),
        }
    }

    pub fn build(&self) -> Cdga {
        match self {
            CatalogSpec::Point => Cdga::ground_field(),
            CatalogSpec::Sphere(k) => sphere(*k),
            CatalogSpec::CohomologySphere(k) => cohomology_sphere(*k),
            CatalogSpec::Cpn(n) => cpn(*n),
            CatalogSpec::Product(a, b) => a.build().tensor_product(&b.build()),
        }
    }

    /// Cup-length of the modeled space.
    pub fn cup_length(&self) -> u32 {
        match self {
            CatalogSpec::Point => 0,
            CatalogSpec::Sphere(_) | CatalogSpec::CohomologySphere(_) => 1,
            CatalogSpec::Cpn(n) => *n as u32,
            CatalogSpec::Product(a, b) => a.cup_length() + b.cup_length(),
        }
    }

    /// `tc_n` of the modeled space (reduced).
    pub fn tc(&self, n: u32) -> u32 {
        match self {
            CatalogSpec::Point => 0,
            CatalogSpec::Sphere(k) | CatalogSpec::CohomologySphere(k) => {
                if k % 2 == 0 {
                    n
                } else {
                    n - 1
                }
            }
            CatalogSpec::Cpn(m) => *m as u32 * n,
            CatalogSpec::Product(a, b) => a.tc(n) + b.tc(n),
        }
    }

    pub fn entry(&self) -> CatalogEntry {
        let mut known = vec![KnownValue {
            invariant: "cup-length".into(),
            value: self.cup_length(),
            note: "classical cup-length, additive on products",
        }];
        for n in 2..=4 {
            known.push(KnownValue {
                invariant: format!("tc_{n}"),
                value: self.tc(n),
                note: "spheres: n or n-1 by parity; CP^m: m*n; additive on products",
            });
        }
        CatalogEntry { spec: self.clone(), algebra: Arc::new(self.build()), known }
    }
}

/// `Λx_k` for odd `k`; `Λ(x_k, y_{2k-1})` with `dy = x²` for even `k`.
pub fn sphere(k: usize) -> Cdga {
    assert!(k >= 1, "spheres have positive dimension");
    let builder = Cdga::builder().generator("x", k);
    if k % 2 == 1 {
        return builder.build().expect("free odd generator");
    }
    builder
        .generator("y", 2 * k - 1)
        .differential("y", vec![(q(1), vec![("x".to_string(), 2)])])
        .build()
        .expect("dy = x^2 is a valid differential")
}

/// `H(S^k)` with zero differential.
pub fn cohomology_sphere(k: usize) -> Cdga {
    assert!(k >= 1, "spheres have positive dimension");
    let builder = Cdga::builder().generator("x", k);
    if k % 2 == 1 { builder } else { builder.relation(&[("x", 2)]) }.build().expect("valid relation")
}

/// `ℚ[x]/x^{n+1}` with `x` in degree 2.
pub fn cpn(n: usize) -> Cdga {
    assert!(n >= 1, "CP^n needs n >= 1");
    Cdga::builder().generator("x", 2).relation(&[("x", n as u32 + 1)]).build().expect("valid relation")
}

/// `μ_n : A^{⊗n} → A`.
pub fn mult_model(algebra: Arc<Cdga>, n: usize) -> Result<CdgaMorphism, CatalogError> {
    if n < 1 {
        return Err(CatalogError::InvalidParameter { name: "mult-model".into(), reason: "n must be positive".into() });
    }
    Ok(CdgaMorphism::multiplication(algebra, n).expect("n >= 1"))
}
