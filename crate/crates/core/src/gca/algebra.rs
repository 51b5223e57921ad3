use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use num::{One, Zero};

use super::monomial::multiply_monomials;
use super::{AlgebraError, Element, Generator, Monomial};
use crate::linalg::Q;

/// Fingerprint of an algebra's generators and relations. Elements carry it so that arithmetic
/// across different algebras is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraId(u64);

/// A polynomial given by name: a list of `(coefficient, [(generator, exponent)])` terms, each
/// term read as the ordered product of its factors.
pub type PolySpec = Vec<(Q, Vec<(String, u32)>)>;

/// How generator names are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NameStyle {
    /// `x^2*y`; only meaningful for single-slot algebras.
    Plain,
    /// One field per tensor slot joined by `@`, e.g. `x@1` for `x ⊗ 1`.
    TensorSlots,
    /// Slot appended to the name (`x_1`, `x_2`), used when writing model files.
    Mangled,
}

/// Finitely presented graded-commutative differential algebra over ℚ: free on its generators,
/// modulo monomial relations, with a degree +1 differential.
#[derive(Clone)]
pub struct Cdga {
    /// Canonical order: `(degree, index)`.
    generators: Vec<Generator>,
    odd: Vec<bool>,
    relations: Vec<Monomial>,
    differential: Vec<Element>,
    slots: usize,
    id: AlgebraId,
    top_degree: Option<usize>,
}

impl PartialEq for Cdga {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
            && self.relations == other.relations
            && self.differential == other.differential
    }
}

impl Eq for Cdga {}

impl fmt::Debug for Cdga {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> =
            self.generators.iter().map(|g| format!("{}:{}", self.generator_label(g), g.degree)).collect();
        let rels: Vec<String> = self.relations.iter().map(|r| self.render_monomial(r, self.style())).collect();
        let diffs: Vec<String> = self
            .generators
            .iter()
            .zip(&self.differential)
            .filter(|(_, d)| !d.is_zero())
            .map(|(g, d)| format!("d{} = {}", self.generator_label(g), self.render(d)))
            .collect();
        f.debug_struct("Cdga")
            .field("generators", &gens)
            .field("relations", &rels)
            .field("differential", &diffs)
            .finish()
    }
}

/// Incremental description of a single-slot algebra by generator names.
#[derive(Debug, Clone, Default)]
pub struct CdgaBuilder {
    generators: Vec<(String, usize)>,
    relations: Vec<Vec<(String, u32)>>,
    differentials: Vec<(String, PolySpec)>,
}

impl CdgaBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn generator(mut self, name: impl Into<String>, degree: usize) -> Self {
        self.generators.push((name.into(), degree));
        self
    }

    pub fn relation(mut self, factors: &[(&str, u32)]) -> Self {
        self.relations.push(factors.iter().map(|(n, e)| (n.to_string(), *e)).collect());
        self
    }

    pub fn relation_owned(mut self, factors: Vec<(String, u32)>) -> Self {
        self.relations.push(factors);
        self
    }

    pub fn differential(mut self, generator: impl Into<String>, poly: PolySpec) -> Self {
        self.differentials.push((generator.into(), poly));
        self
    }

    pub fn build(self) -> Result<Cdga, AlgebraError> {
        let generators: Vec<Generator> = self
            .generators
            .iter()
            .enumerate()
            .map(|(index, (name, degree))| Generator { name: name.clone(), degree: *degree, index, slot: 0 })
            .collect();
        let shell = Cdga::shell(generators, Vec::new())?;
        let mut relations = Vec::with_capacity(self.relations.len());
        for factors in &self.relations {
            relations.push(shell.relation_monomial(factors)?);
        }
        let shell = Cdga::shell(shell.generators_in_declaration_order(), relations)?;
        let mut differential = vec![Element::zero_in(shell.id); shell.generators.len()];
        for (name, poly) in &self.differentials {
            let pos = shell.position(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?;
            differential[pos] = shell.element_from_spec(poly)?;
        }
        shell.with_differential(differential)
    }
}

impl Cdga {
    pub fn builder() -> CdgaBuilder {
        CdgaBuilder::new()
    }

    /// The ground field ℚ.
    pub fn ground_field() -> Self {
        Self::shell(Vec::new(), Vec::new()).expect("empty algebra is valid")
    }

    /// Sorts generators canonically and validates names, degrees and relations; differential
    /// is zero.
    pub(crate) fn shell(mut generators: Vec<Generator>, relations: Vec<Monomial>) -> Result<Self, AlgebraError> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(AlgebraError::ZeroDegreeGenerator(g.name.clone()));
            }
            if generators[..i].iter().any(|h| h.name == g.name && h.slot == g.slot) {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        generators.sort_by_key(|g| (g.degree, g.index));
        let odd: Vec<bool> = generators.iter().map(Generator::is_odd).collect();
        let slots = generators.iter().map(|g| g.slot + 1).max().unwrap_or(1);
        let mut relations = relations;
        for r in &relations {
            if r.exponents().len() != generators.len() {
                return Err(AlgebraError::InvalidRelation("relation over a different generator set".into()));
            }
            if r.is_unit() {
                return Err(AlgebraError::InvalidRelation("the unit cannot be a relation".into()));
            }
            if r.exponents().iter().zip(&odd).any(|(&e, &o)| o && e > 1) {
                return Err(AlgebraError::InvalidRelation("odd generators square to zero; exponent must be 1".into()));
            }
        }
        relations.sort();
        relations.dedup();
        let mut hasher = DefaultHasher::new();
        generators.hash(&mut hasher);
        relations.hash(&mut hasher);
        let id = AlgebraId(hasher.finish());
        let differential = vec![Element::zero_in(id); generators.len()];
        let mut out = Self { generators, odd, relations, differential, slots, id, top_degree: None };
        out.top_degree = out.compute_top_degree();
        Ok(out)
    }

    /// Installs a differential given per canonical generator position and checks it.
    pub(crate) fn with_differential(mut self, differential: Vec<Element>) -> Result<Self, AlgebraError> {
        assert_eq!(differential.len(), self.generators.len());
        for (g, dg) in self.generators.iter().zip(&differential) {
            if dg.algebra != self.id {
                return Err(AlgebraError::MismatchedAlgebras);
            }
            match dg.homogeneity() {
                super::Homogeneity::Zero => {}
                super::Homogeneity::Degree(d) if d == g.degree + 1 => {}
                super::Homogeneity::Degree(d) => {
                    return Err(AlgebraError::DegreeMismatch {
                        generator: g.name.clone(),
                        expected: g.degree + 1,
                        found: d,
                    })
                }
                super::Homogeneity::Mixed => return Err(AlgebraError::InhomogeneousElement(g.name.clone())),
            }
        }
        self.differential = differential;
        for r in &self.relations {
            let dr = self.leibniz(r, false);
            if dr.terms.keys().any(|m| !self.relations.iter().any(|rel| rel.divides(m))) {
                return Err(AlgebraError::RelationNotStable(self.render_monomial(r, self.style())));
            }
        }
        for (pos, g) in self.generators.iter().enumerate() {
            let dd = self.apply_differential(&self.differential[pos])?;
            if !dd.is_zero() {
                return Err(AlgebraError::DifferentialNotSquareZero(self.generator_label(g)));
            }
        }
        Ok(self)
    }

    pub fn id(&self) -> AlgebraId {
        self.id
    }

    /// Generators in canonical order.
    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generators_in_declaration_order(&self) -> Vec<Generator> {
        let mut gens = self.generators.clone();
        gens.sort_by_key(|g| g.index);
        gens
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    /// Number of tensor slots (1 unless built by a tensor product).
    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn has_zero_differential(&self) -> bool {
        self.differential.iter().all(Element::is_zero)
    }

    /// `d` of the generator at canonical position `pos`.
    pub fn differential_of(&self, pos: usize) -> &Element {
        &self.differential[pos]
    }

    pub fn is_odd_position(&self, pos: usize) -> bool {
        self.odd[pos]
    }

    /// Canonical position of a slot-0 generator.
    pub fn position(&self, name: &str) -> Option<usize> {
        self.position_in_slot(name, 0)
    }

    pub fn position_in_slot(&self, name: &str, slot: usize) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name && g.slot == slot)
    }

    pub fn max_generator_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Highest degree with a nonzero basis monomial, when the algebra is recognizably
    /// finite-dimensional: every even generator is killed by a pure-power relation.
    pub fn top_degree(&self) -> Option<usize> {
        self.top_degree
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.top_degree.is_some()
    }

    /// Default truncation: `8 · (largest generator degree)` capped at 40, raised to
    /// `top degree + 1` for finite-dimensional algebras so every class is visible.
    pub fn default_truncation(&self) -> usize {
        let rule = (8 * self.max_generator_degree()).min(40);
        match self.top_degree {
            Some(top) => rule.max(top + 1),
            None => rule.max(1),
        }
    }

    fn pure_power_bound(&self, pos: usize) -> Option<u32> {
        if self.odd[pos] {
            return Some(1);
        }
        self.relations
            .iter()
            .filter(|r| r.factors().count() == 1 && r.exponents()[pos] > 0)
            .map(|r| r.exponents()[pos] - 1)
            .min()
    }

    fn compute_top_degree(&self) -> Option<usize> {
        let mut bound = 0;
        for (pos, g) in self.generators.iter().enumerate() {
            bound += self.pure_power_bound(pos)? as usize * g.degree;
        }
        let basis = self.basis_up_to(bound);
        basis.iter().rposition(|ms| !ms.is_empty())
    }

    pub fn zero(&self) -> Element {
        Element::zero_in(self.id)
    }

    pub fn one(&self) -> Element {
        self.constant(Q::one())
    }

    pub fn constant(&self, c: Q) -> Element {
        Element::monomial_in(self.id, Monomial::unit(self.generators.len()), c)
    }

    pub fn monomial_element(&self, m: &Monomial) -> Element {
        Element::monomial_in(self.id, m.clone(), Q::one())
    }

    /// The generator at canonical position `pos`, as an element.
    pub fn generator_element(&self, pos: usize) -> Element {
        let mut exps = vec![0; self.generators.len()];
        exps[pos] = 1;
        self.reduce_monomial(Monomial::from_parts(exps, self.generators[pos].degree))
            .map_or_else(|| self.zero(), |m| self.monomial_element(&m))
    }

    pub fn generator_by_name(&self, name: &str) -> Option<Element> {
        self.position(name).map(|p| self.generator_element(p))
    }

    /// Whether the monomial is nonzero in the quotient by the relations.
    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.relations.iter().any(|r| r.divides(m))
    }

    fn reduce_monomial(&self, m: Monomial) -> Option<Monomial> {
        self.is_standard(&m).then_some(m)
    }

    fn relation_monomial(&self, factors: &[(String, u32)]) -> Result<Monomial, AlgebraError> {
        let mut exps = vec![0u32; self.generators.len()];
        let mut degree = 0;
        for (name, e) in factors {
            let pos = self.position(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?;
            exps[pos] += e;
            degree += self.generators[pos].degree * *e as usize;
        }
        Ok(Monomial::from_parts(exps, degree))
    }

    /// The ordered product `g_1^{e_1} · g_2^{e_2} ⋯` of named slot-0 generators.
    pub fn element_from_factors(&self, factors: &[(String, u32)]) -> Result<Element, AlgebraError> {
        let mut acc = self.one();
        for (name, e) in factors {
            let pos = self.position(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.clone()))?;
            let g = self.generator_element(pos);
            for _ in 0..*e {
                acc = self.multiply(&acc, &g)?;
            }
        }
        Ok(acc)
    }

    pub fn element_from_spec(&self, poly: &PolySpec) -> Result<Element, AlgebraError> {
        let mut acc = self.zero();
        for (c, factors) in poly {
            let term = self.element_from_factors(factors)?;
            acc = acc.try_add(&term.scaled(c))?;
        }
        Ok(acc)
    }

    fn multiply_terms(&self, u: &Element, v: &Element, reduce: bool) -> Element {
        let mut out = self.zero();
        for (mu, cu) in &u.terms {
            for (mv, cv) in &v.terms {
                let Some((m, negative)) = multiply_monomials(&self.odd, mu, mv) else {
                    continue;
                };
                if reduce && !self.is_standard(&m) {
                    continue;
                }
                let c = cu * cv;
                out.add_term(m, if negative { -c } else { c });
            }
        }
        out
    }

    /// Graded-commutative product.
    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element, AlgebraError> {
        if u.algebra != self.id || v.algebra != self.id {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        Ok(self.multiply_terms(u, v, true))
    }

    /// The monomial as an ordered list of generator positions, repeated by exponent.
    fn flatten(m: &Monomial) -> Vec<usize> {
        m.factors().flat_map(|(pos, e)| std::iter::repeat_n(pos, e as usize)).collect()
    }

    /// `d(g_1 ⋯ g_r) = Σ_j (-1)^{|g_1 ⋯ g_{j-1}|} g_1 ⋯ g_{j-1} · d(g_j) · g_{j+1} ⋯ g_r`.
    /// With `reduce = false` the products are taken in the free algebra.
    fn leibniz(&self, m: &Monomial, reduce: bool) -> Element {
        let factors = Self::flatten(m);
        let gens: Vec<Element> = factors
            .iter()
            .map(|&pos| {
                let mut exps = vec![0; self.generators.len()];
                exps[pos] = 1;
                Element::monomial_in(self.id, Monomial::from_parts(exps, self.generators[pos].degree), Q::one())
            })
            .collect();
        let mut out = self.zero();
        let mut prefix_degree = 0;
        for j in 0..factors.len() {
            let mut term = self.constant(if prefix_degree % 2 == 1 { -Q::one() } else { Q::one() });
            for (k, g) in gens.iter().enumerate() {
                let factor = if k == j { &self.differential[factors[k]] } else { g };
                term = self.multiply_terms(&term, factor, reduce);
                if term.is_zero() {
                    break;
                }
            }
            out = out.try_add(&term).expect("same algebra");
            prefix_degree += self.generators[factors[j]].degree;
        }
        out
    }

    /// The degree +1 derivation extending the generator differentials.
    pub fn apply_differential(&self, u: &Element) -> Result<Element, AlgebraError> {
        if u.algebra != self.id {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        let mut out = self.zero();
        for (m, c) in &u.terms {
            out = out.try_add(&self.leibniz(m, true).scaled(c))?;
        }
        Ok(out)
    }

    /// Standard monomials of degree `0..=max_degree`, grouped by degree in canonical order.
    pub fn basis_up_to(&self, max_degree: usize) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); max_degree + 1];
        let mut exps = vec![0u32; self.generators.len()];
        self.enumerate(0, 0, max_degree, &mut exps, &mut out);
        for ms in &mut out {
            ms.sort();
        }
        out
    }

    fn enumerate(&self, pos: usize, degree: usize, max: usize, exps: &mut Vec<u32>, out: &mut [Vec<Monomial>]) {
        if pos == self.generators.len() {
            let m = Monomial::from_parts(exps.clone(), degree);
            if self.is_standard(&m) {
                out[degree].push(m);
            }
            return;
        }
        let g = self.generators[pos].degree;
        let cap = self.pure_power_bound(pos).unwrap_or(u32::MAX);
        let mut e = 0u32;
        while e <= cap && degree + e as usize * g <= max {
            exps[pos] = e;
            // prune when a relation supported on the first `pos + 1` generators already divides
            let partial = Monomial::from_parts(exps.clone(), 0);
            let blocked = e > 0
                && self
                    .relations
                    .iter()
                    .any(|r| r.exponents()[pos + 1..].iter().all(|&x| x == 0) && r.divides(&partial));
            if blocked {
                break;
            }
            self.enumerate(pos + 1, degree + e as usize * g, max, exps, out);
            e += 1;
        }
        exps[pos] = 0;
    }

    fn style(&self) -> NameStyle {
        if self.slots > 1 {
            NameStyle::TensorSlots
        } else {
            NameStyle::Plain
        }
    }

    fn generator_label(&self, g: &Generator) -> String {
        if self.slots > 1 {
            format!("{}_{}", g.name, g.slot + 1)
        } else {
            g.name.clone()
        }
    }

    /// Name of a generator as written in model files.
    pub fn model_name(&self, pos: usize) -> String {
        self.generator_label(&self.generators[pos])
    }

    pub fn render_monomial(&self, m: &Monomial, style: NameStyle) -> String {
        let power = |e: u32, name: &str| -> String {
            if e == 1 {
                name.to_string()
            } else {
                format!("{name}^{e}")
            }
        };
        match style {
            NameStyle::Plain | NameStyle::Mangled => {
                let parts: Vec<String> = m
                    .factors()
                    .map(|(pos, e)| {
                        let name = if style == NameStyle::Mangled {
                            self.generator_label(&self.generators[pos])
                        } else {
                            self.generators[pos].name.clone()
                        };
                        power(e, &name)
                    })
                    .collect();
                if parts.is_empty() {
                    "1".to_string()
                } else {
                    parts.join("*")
                }
            }
            NameStyle::TensorSlots => {
                let mut fields = vec![Vec::new(); self.slots];
                for (pos, e) in m.factors() {
                    let g = &self.generators[pos];
                    fields[g.slot].push(power(e, &g.name));
                }
                fields
                    .into_iter()
                    .map(|f| if f.is_empty() { "1".to_string() } else { f.join("*") })
                    .collect::<Vec<_>>()
                    .join("@")
            }
        }
    }

    pub fn render_with(&self, u: &Element, style: NameStyle) -> String {
        if u.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in u.terms.iter().enumerate() {
            let negative = c < &Q::zero();
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if m.is_unit() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&self.render_monomial(m, style));
            } else {
                out.push_str(&format!("{}*{}", magnitude, self.render_monomial(m, style)));
            }
        }
        out
    }

    /// Human rendering: `@`-separated tensor slots for tensor products, plain names otherwise.
    pub fn render(&self, u: &Element) -> String {
        self.render_with(u, self.style())
    }

    pub(crate) fn from_generators_unchecked_slots(
        generators: Vec<Generator>,
        relations: Vec<Monomial>,
        differential_by_decl: impl Fn(&Cdga, &Generator) -> Result<Element, AlgebraError>,
    ) -> Result<Self, AlgebraError> {
        let shell = Self::shell(generators, relations)?;
        let differential =
            shell.generators.iter().map(|g| differential_by_decl(&shell, g)).collect::<Result<Vec<_>, _>>()?;
        shell.with_differential(differential)
    }
}
