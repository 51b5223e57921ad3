use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gca::{Cdga, CdgaMorphism, Monomial};

/// Size envelope of random instances. `max_generators` bounds the generators of `A₁ ⊗ A₂`; each
/// factor gets at least one and at most half of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SizeParams {
    pub max_generators: usize,
    pub max_degree: usize,
    pub max_exponent: u32,
}

impl Default for SizeParams {
    fn default() -> Self {
        Self { max_generators: 4, max_degree: 6, max_exponent: 4 }
    }
}

impl SizeParams {
    /// One generator of degree 1 per factor.
    pub fn minimal() -> Self {
        Self { max_generators: 2, max_degree: 1, max_exponent: 2 }
    }
}

/// A pair of surjective projections `φᵢ : Aᵢ → Aᵢ/Jᵢ` with zero differential, `Jᵢ` monomial.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub seed: u64,
    pub phi1: CdgaMorphism,
    pub phi2: CdgaMorphism,
    pub killed1: Vec<String>,
    pub killed2: Vec<String>,
}

impl RandomInstance {
    /// Smallest truncation making every value exact: one past the top degree of `A₁ ⊗ A₂`.
    pub fn truncation(&self) -> usize {
        let top = |phi: &CdgaMorphism| phi.source().top_degree().expect("random algebras are finite-dimensional");
        top(&self.phi1) + top(&self.phi2) + 1
    }

    pub fn describe(&self) -> String {
        format!(
            "seed {}: A1 = {:?}, J1 = ({}); A2 = {:?}, J2 = ({})",
            self.seed,
            self.phi1.source(),
            self.killed1.join(", "),
            self.phi2.source(),
            self.killed2.join(", ")
        )
    }
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

fn random_algebra(rng: &mut ChaCha8Rng, params: &SizeParams) -> Cdga {
    let count = rng.gen_range(1..=(params.max_generators / 2).max(1));
    let mut builder = Cdga::builder();
    for name in NAMES.iter().take(count) {
        let degree = rng.gen_range(1..=params.max_degree.max(1));
        builder = builder.generator(*name, degree);
        if degree % 2 == 0 {
            builder = builder.relation(&[(name, rng.gen_range(2..=params.max_exponent.max(2)))]);
        }
    }
    builder.build().expect("random algebra is valid")
}

fn random_projection(rng: &mut ChaCha8Rng, a: Arc<Cdga>) -> (CdgaMorphism, Vec<String>) {
    let top = a.top_degree().expect("every even generator is bounded");
    let monomials: Vec<Monomial> = a.basis_up_to(top).into_iter().skip(1).flatten().collect();
    let size = rng.gen_range(1..=monomials.len().min(2));
    let mut chosen: Vec<Monomial> =
        sample(rng, monomials.len(), size).into_iter().map(|i| monomials[i].clone()).collect();
    chosen.sort();
    let names = chosen.iter().map(|m| a.render(&a.monomial_element(m))).collect();
    let kills_all =
        (0..a.generators().len()).all(|pos| chosen.iter().any(|m| m.length() == 1 && m.exponents()[pos] == 1));
    let phi = if kills_all {
        CdgaMorphism::augmentation(a)
    } else {
        CdgaMorphism::quotient_projection(a, &chosen).expect("monomial quotient of a d = 0 algebra")
    };
    (phi, names)
}

/// Deterministic in `seed`.
pub fn random_instance(seed: u64, params: &SizeParams) -> RandomInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a1 = Arc::new(random_algebra(&mut rng, params));
    let a2 = Arc::new(random_algebra(&mut rng, params));
    let (phi1, killed1) = random_projection(&mut rng, a1);
    let (phi2, killed2) = random_projection(&mut rng, a2);
    RandomInstance { seed, phi1, phi2, killed1, killed2 }
}
