use super::{CohomologyError, GradedRing};
use crate::invariants::{render_product, Certification, Factor, InvariantResult, Witness};
use crate::linalg::{QuotientMap, SpanSolver, SparseVec, SubspaceBasis};

/// A graded subspace of a ring closed under multiplication, one subspace per degree of the
/// ring's window.
#[derive(Debug)]
pub struct GradedIdeal<'r, R: GradedRing + ?Sized> {
    ring: &'r R,
    parts: Vec<SubspaceBasis>,
}

impl<R: GradedRing + ?Sized> Clone for GradedIdeal<'_, R> {
    fn clone(&self) -> Self {
        Self { ring: self.ring, parts: self.parts.clone() }
    }
}

/// A product of `p` minimal generators of `I`. Ring multiples of these span `I^p`.
#[derive(Debug, Clone)]
pub struct SpanningProduct {
    pub degree: usize,
    pub vector: SparseVec,
    /// `(degree, index)` into the minimal generators, in multiplication order.
    pub factors: Vec<(usize, usize)>,
}

/// Successive powers `I, I^2, …` together with products spanning each of them.
#[derive(Debug)]
pub struct PowerTower<'r, R: GradedRing + ?Sized> {
    generators: Vec<Vec<SparseVec>>,
    /// `levels[p - 1]` is `I^p` with independent products of `p` generators generating it.
    levels: Vec<(GradedIdeal<'r, R>, Vec<SpanningProduct>)>,
}

impl<'r, R: GradedRing + ?Sized> GradedIdeal<'r, R> {
    pub fn zero(ring: &'r R) -> Self {
        let parts = (0..=ring.window()).map(|k| SubspaceBasis::zero(ring.dim(k))).collect();
        Self { ring, parts }
    }

    /// The ideal with the given degreewise parts; closure under multiplication is checked.
    pub fn new(ring: &'r R, parts: Vec<SubspaceBasis>) -> Result<Self, CohomologyError> {
        if parts.len() != ring.window() + 1 {
            return Err(CohomologyError::WindowMismatch);
        }
        for (k, p) in parts.iter().enumerate() {
            if p.ambient() != ring.dim(k) {
                return Err(CohomologyError::WindowMismatch);
            }
        }
        let ideal = Self { ring, parts };
        if let Some(k) = ideal.first_closure_failure() {
            return Err(CohomologyError::NotAnIdeal(k));
        }
        Ok(ideal)
    }

    /// For subspaces already known to form an ideal, such as kernels of multiplicative maps.
    pub(crate) fn from_parts_unchecked(ring: &'r R, parts: Vec<SubspaceBasis>) -> Self {
        debug_assert_eq!(parts.len(), ring.window() + 1);
        Self { ring, parts }
    }

    /// The smallest ideal containing the given homogeneous elements.
    pub fn generated_by(ring: &'r R, generators: &[(usize, SparseVec)]) -> Self {
        let window = ring.window();
        let mut spans: Vec<Vec<SparseVec>> = vec![Vec::new(); window + 1];
        for (k, g) in generators {
            if *k > window {
                continue;
            }
            for i in 0..=window - k {
                for b in 0..ring.dim(i) {
                    spans[k + i].push(ring.multiply(i, &crate::linalg::unit_vec(b), *k, g));
                }
            }
        }
        let parts = spans
            .into_iter()
            .enumerate()
            .map(|(k, vs)| SubspaceBasis::span(ring.dim(k), vs).expect("products fit the ring"))
            .collect();
        Self { ring, parts }
    }

    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn part(&self, degree: usize) -> &SubspaceBasis {
        &self.parts[degree]
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.parts.iter().map(SubspaceBasis::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(SubspaceBasis::is_zero)
    }

    pub fn contains(&self, degree: usize, v: &SparseVec) -> bool {
        self.parts[degree].contains(v).unwrap_or(false)
    }

    pub fn is_subideal_of(&self, other: &GradedIdeal<'_, R>) -> bool {
        self.parts.len() == other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a.is_subspace_of(b).unwrap_or(false))
    }

    /// Lowest degree where `ring basis · I` leaves `I`, within the window.
    pub fn first_closure_failure(&self) -> Option<usize> {
        let window = self.ring.window();
        for k in 0..=window {
            for v in self.parts[k].vectors() {
                for i in 1..=window - k {
                    for b in 0..self.ring.dim(i) {
                        let p = self.ring.multiply(i, &crate::linalg::unit_vec(b), k, v);
                        if !self.contains(i + k, &p) {
                            return Some(i + k);
                        }
                    }
                }
            }
        }
        None
    }

    /// Minimal generators per degree: representatives of `I_k` modulo `(R_+ · I)_k`.
    pub fn minimal_generators(&self) -> Vec<Vec<SparseVec>> {
        let window = self.ring.window();
        let mut gens: Vec<Vec<SparseVec>> = vec![Vec::new(); window + 1];
        for k in 0..=window {
            let mut decomposable = Vec::new();
            for (j, gs) in gens.iter().enumerate().take(k) {
                let i = k - j;
                for g in gs {
                    for b in 0..self.ring.dim(i) {
                        decomposable.push(self.ring.multiply(i, &crate::linalg::unit_vec(b), j, g));
                    }
                }
            }
            let dec = SubspaceBasis::span(self.ring.dim(k), decomposable).expect("products fit the ring");
            let quotient = QuotientMap::new(&self.parts[k], &dec).expect("R_+ · I lies in I");
            gens[k] = quotient.representatives().to_vec();
        }
        gens
    }

    /// Builds `I^1, …, I^p`, stopping early once a power vanishes.
    pub fn power_tower(&self, max_power: usize) -> PowerTower<'r, R> {
        let window = self.ring.window();
        let generators = self.minimal_generators();
        let mut levels: Vec<(GradedIdeal<'r, R>, Vec<SpanningProduct>)> = Vec::new();
        let first: Vec<SpanningProduct> = generators
            .iter()
            .enumerate()
            .flat_map(|(k, gs)| {
                gs.iter().enumerate().map(move |(i, g)| SpanningProduct {
                    degree: k,
                    vector: g.clone(),
                    factors: vec![(k, i)],
                })
            })
            .collect();
        levels.push((self.clone(), first));
        while levels.len() < max_power {
            let (prev_ideal, prev_products) = levels.last().expect("nonempty");
            if prev_ideal.is_zero() {
                break;
            }
            let mut solvers: Vec<SpanSolver> = (0..=window).map(|k| SpanSolver::new(self.ring.dim(k))).collect();
            let mut products = Vec::new();
            for prod in prev_products {
                for (j, gs) in generators.iter().enumerate() {
                    let k = prod.degree + j;
                    if k > window {
                        break;
                    }
                    for (gi, g) in gs.iter().enumerate() {
                        let v = self.ring.multiply(prod.degree, &prod.vector, j, g);
                        if v.is_empty() {
                            continue;
                        }
                        if solvers[k].push(&v).expect("product fits the ring") {
                            let mut factors = prod.factors.clone();
                            factors.push((j, gi));
                            products.push(SpanningProduct { degree: k, vector: v, factors });
                        }
                    }
                }
            }
            products.sort_by_key(|p| p.degree);
            let parts = self.ring_multiples(&products);
            levels.push((GradedIdeal { ring: self.ring, parts }, products));
        }
        PowerTower { generators, levels }
    }

    /// Degreewise span of `R · v` over the given products.
    fn ring_multiples(&self, products: &[SpanningProduct]) -> Vec<SubspaceBasis> {
        let window = self.ring.window();
        let mut spans: Vec<Vec<SparseVec>> = vec![Vec::new(); window + 1];
        for p in products {
            for i in 0..=window - p.degree {
                for b in 0..self.ring.dim(i) {
                    spans[p.degree + i].push(self.ring.multiply(i, &crate::linalg::unit_vec(b), p.degree, &p.vector));
                }
            }
        }
        spans
            .into_iter()
            .enumerate()
            .map(|(k, vs)| SubspaceBasis::span(self.ring.dim(k), vs).expect("products fit the ring"))
            .collect()
    }

    /// `I^p` for `p ≥ 1`, correct in every degree of the window.
    pub fn power(&self, p: usize) -> GradedIdeal<'r, R> {
        assert!(p >= 1, "ideal powers start at 1");
        let tower = self.power_tower(p);
        match tower.levels.get(p - 1) {
            Some((ideal, _)) => ideal.clone(),
            None => GradedIdeal::zero(self.ring),
        }
    }

    /// Greatest `m` with `I^m ≠ 0` (`I^0` being the ring), so the zero ideal has nilpotency 0.
    ///
    /// Exact when the ring is complete; otherwise a lower bound (powers may survive above the
    /// window).
    pub fn nilpotency(&self, name: &str) -> InvariantResult {
        let tower = self.power_tower(usize::MAX);
        let value = tower.levels.iter().take_while(|(ideal, _)| !ideal.is_zero()).count();
        let status =
            if self.ring.is_complete() { Certification::CertifiedExact } else { Certification::CertifiedLowerBound };
        let witness = (value > 0).then(|| tower.product_witness(self.ring, value));
        InvariantResult {
            name: name.to_string(),
            value: value as u32,
            status,
            truncation: self.ring.window(),
            witness,
            failures: Vec::new(),
            note: None,
        }
    }
}

impl<'r, R: GradedRing + ?Sized> PowerTower<'r, R> {
    pub fn generators(&self) -> &[Vec<SparseVec>] {
        &self.generators
    }

    /// Number of computed levels; the last may be the zero ideal.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// `I^p` (zero beyond the computed levels once a power vanished).
    pub fn level(&self, p: usize) -> Option<&GradedIdeal<'r, R>> {
        self.levels.get(p - 1).map(|(ideal, _)| ideal)
    }

    pub fn spanning_products(&self, p: usize) -> &[SpanningProduct] {
        self.levels.get(p - 1).map_or(&[], |(_, ps)| ps.as_slice())
    }

    pub fn factors_of(&self, product: &SpanningProduct) -> Vec<Factor> {
        product.factors.iter().map(|&(k, i)| Factor { degree: k, vector: self.generators[k][i].clone() }).collect()
    }

    pub fn render_factors(&self, ring: &R, product: &SpanningProduct) -> String {
        let parts: Vec<(String, bool)> = product
            .factors
            .iter()
            .map(|&(k, i)| {
                let g = &self.generators[k][i];
                (ring.render(k, g), ring.is_bare(k, g))
            })
            .collect();
        render_product(&parts)
    }

    /// The first spanning product of `I^p` in the lowest degree, as a witness of `I^p ≠ 0`.
    fn product_witness(&self, ring: &R, p: usize) -> Witness {
        let product = self.spanning_products(p).first().expect("nonzero power has a spanning product");
        Witness::NonzeroProduct {
            degree: product.degree,
            factors: self.factors_of(product),
            product: product.vector.clone(),
            rendered: self.render_factors(ring, product),
        }
    }
}
