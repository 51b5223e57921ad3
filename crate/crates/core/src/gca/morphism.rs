use std::sync::Arc;

use super::{AlgebraError, Cdga, Element, Homogeneity, Monomial, TensorProduct};

/// A degree-0 algebra map commuting with the differentials, given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdgaMorphism {
    source: Arc<Cdga>,
    target: Arc<Cdga>,
    /// Image of each source generator, in the source's canonical order.
    images: Vec<Element>,
}

impl CdgaMorphism {
    /// Checks degrees, that relations map to zero, and `φ(dg) = d(φg)` for every generator.
    pub fn new(source: Arc<Cdga>, target: Arc<Cdga>, images: Vec<Element>) -> Result<Self, AlgebraError> {
        assert_eq!(images.len(), source.generators().len(), "one image per source generator");
        for (g, img) in source.generators().iter().zip(&images) {
            if img.algebra_id() != target.id() {
                return Err(AlgebraError::MismatchedAlgebras);
            }
            match img.homogeneity() {
                Homogeneity::Zero => {}
                Homogeneity::Degree(d) if d == g.degree => {}
                Homogeneity::Degree(d) => {
                    return Err(AlgebraError::DegreeMismatch {
                        generator: g.name.clone(),
                        expected: g.degree,
                        found: d,
                    })
                }
                Homogeneity::Mixed => return Err(AlgebraError::InhomogeneousElement(g.name.clone())),
            }
        }
        let phi = Self { source, target, images };
        for r in phi.source.relations() {
            if !phi.apply_monomial(r).is_zero() {
                return Err(AlgebraError::RelationNotPreserved(
                    phi.source.render_monomial(r, super::NameStyle::Mangled),
                ));
            }
        }
        for pos in 0..phi.source.generators().len() {
            let lhs = phi.apply(phi.source.differential_of(pos))?;
            let rhs = phi.target.apply_differential(&phi.images[pos])?;
            if lhs != rhs {
                return Err(AlgebraError::NotChainMap(phi.source.model_name(pos)));
            }
        }
        Ok(phi)
    }

    pub fn identity(a: Arc<Cdga>) -> Self {
        let images = (0..a.generators().len()).map(|p| a.generator_element(p)).collect();
        Self { source: Arc::clone(&a), target: a, images }
    }

    /// `ε : A → ℚ`, killing every generator.
    pub fn augmentation(a: Arc<Cdga>) -> Self {
        let target = Arc::new(Cdga::ground_field());
        let images = vec![target.zero(); a.generators().len()];
        Self { source: a, target, images }
    }

    /// `μ_n : A^{⊗n} → A`, `a_1 ⊗ ⋯ ⊗ a_n ↦ a_1 ⋯ a_n`.
    pub fn multiplication(a: Arc<Cdga>, n: usize) -> Result<Self, AlgebraError> {
        let source = Arc::new(a.tensor_power(n)?);
        let count = a.generators().len();
        let images = source
            .generators()
            .iter()
            .map(|g| {
                let original = g.index % count;
                let pos = a.generators().iter().position(|h| h.index == original).expect("factor generator");
                a.generator_element(pos)
            })
            .collect();
        Self::new(source, a, images)
    }

    /// The projection `A → A/J` for a monomial ideal `J` given by extra relations.
    pub fn quotient_projection(a: Arc<Cdga>, extra: &[Monomial]) -> Result<Self, AlgebraError> {
        let mut relations = a.relations().to_vec();
        relations.extend(extra.iter().cloned());
        let shell = Cdga::shell(a.generators_in_declaration_order(), relations)?;
        let differential = (0..a.generators().len())
            .map(|pos| {
                let mut out = shell.zero();
                for (m, c) in a.differential_of(pos).terms() {
                    if shell.is_standard(m) {
                        out.add_term(m.clone(), c.clone());
                    }
                }
                out
            })
            .collect();
        let target = Arc::new(shell.with_differential(differential)?);
        let images = (0..a.generators().len()).map(|p| target.generator_element(p)).collect();
        Self::new(a, target, images)
    }

    /// `φ₁ ⊗ φ₂ : A₁ ⊗ A₂ → B₁ ⊗ B₂`.
    pub fn tensor(&self, other: &CdgaMorphism) -> Result<Self, AlgebraError> {
        let src = TensorProduct::new(&self.source, &other.source);
        let tgt = TensorProduct::new(&self.target, &other.target);
        let mut images = vec![tgt.product.zero(); src.product.generators().len()];
        for (pos, &p) in src.left_positions().iter().enumerate() {
            images[p] = tgt.include_left(&self.images[pos])?;
        }
        for (pos, &p) in src.right_positions().iter().enumerate() {
            images[p] = tgt.include_right(&other.images[pos])?;
        }
        Self::new(Arc::new(src.product), Arc::new(tgt.product), images)
    }

    pub fn source(&self) -> &Arc<Cdga> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Cdga> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    fn apply_monomial(&self, m: &Monomial) -> Element {
        let mut acc = self.target.one();
        for (pos, e) in m.factors() {
            for _ in 0..e {
                acc = self.target.multiply(&acc, &self.images[pos]).expect("images live in the target");
            }
        }
        acc
    }

    /// The multiplicative, linear extension of the generator images.
    pub fn apply(&self, u: &Element) -> Result<Element, AlgebraError> {
        if u.algebra_id() != self.source.id() {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        let mut out = self.target.zero();
        for (m, c) in u.terms() {
            out = out.try_add(&self.apply_monomial(m).scaled(c))?;
        }
        Ok(out)
    }
}
