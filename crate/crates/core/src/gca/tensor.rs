use super::{AlgebraError, Cdga, Element, Generator, Monomial};

/// `A ⊗ B` together with the inclusions `a ↦ a ⊗ 1` and `b ↦ 1 ⊗ b`.
///
/// Generators of the product are those of `A` followed by those of `B` (declaration indices and
/// tensor slots of `B` shifted past `A`'s).
#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub product: Cdga,
    pub left: Cdga,
    pub right: Cdga,
    left_map: Vec<usize>,
    right_map: Vec<usize>,
}

fn embed_monomial(m: &Monomial, map: &[usize], generators: usize) -> Monomial {
    let mut exps = vec![0; generators];
    for (pos, e) in m.factors() {
        exps[map[pos]] = e;
    }
    Monomial::from_parts(exps, m.degree())
}

impl TensorProduct {
    pub fn new(left: &Cdga, right: &Cdga) -> Self {
        let left_count = left.generators().len();
        let mut generators: Vec<Generator> = left.generators_in_declaration_order();
        generators.extend(right.generators_in_declaration_order().into_iter().map(|g| Generator {
            index: g.index + left_count,
            slot: g.slot + left.slots(),
            ..g
        }));
        let total = generators.len();
        let mut sorted = generators.clone();
        sorted.sort_by_key(|g| (g.degree, g.index));
        let new_pos = |index: usize| sorted.iter().position(|g| g.index == index).expect("generator present");
        let left_map: Vec<usize> = left.generators().iter().map(|g| new_pos(g.index)).collect();
        let right_map: Vec<usize> = right.generators().iter().map(|g| new_pos(g.index + left_count)).collect();

        let relations: Vec<Monomial> = left
            .relations()
            .iter()
            .map(|r| embed_monomial(r, &left_map, total))
            .chain(right.relations().iter().map(|r| embed_monomial(r, &right_map, total)))
            .collect();
        let product = Cdga::from_generators_unchecked_slots(generators, relations, |shell, g| {
            let (factor, map, pos) = if g.index < left_count {
                let pos = left.generators().iter().position(|h| h.index == g.index).expect("left generator");
                (left, &left_map, pos)
            } else {
                let pos =
                    right.generators().iter().position(|h| h.index + left_count == g.index).expect("right generator");
                (right, &right_map, pos)
            };
            Ok(embed_element(shell, factor.differential_of(pos), map))
        })
        .expect("tensor product of valid algebras is valid");
        Self { product, left: left.clone(), right: right.clone(), left_map, right_map }
    }

    /// `a ⊗ 1`
    pub fn include_left(&self, a: &Element) -> Result<Element, AlgebraError> {
        if a.algebra_id() != self.left.id() {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        Ok(embed_element(&self.product, a, &self.left_map))
    }

    /// `1 ⊗ b`
    pub fn include_right(&self, b: &Element) -> Result<Element, AlgebraError> {
        if b.algebra_id() != self.right.id() {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        Ok(embed_element(&self.product, b, &self.right_map))
    }

    /// `a ⊗ b = (a ⊗ 1)(1 ⊗ b)`
    pub fn tensor(&self, a: &Element, b: &Element) -> Result<Element, AlgebraError> {
        self.product.multiply(&self.include_left(a)?, &self.include_right(b)?)
    }

    /// Canonical positions in the product of the left factor's generators.
    pub fn left_positions(&self) -> &[usize] {
        &self.left_map
    }

    pub fn right_positions(&self) -> &[usize] {
        &self.right_map
    }
}

fn embed_element(target: &Cdga, u: &Element, map: &[usize]) -> Element {
    let mut out = target.zero();
    let n = target.generators().len();
    for (m, c) in u.terms() {
        out.add_term(embed_monomial(m, map, n), c.clone());
    }
    out
}

impl Cdga {
    pub fn tensor_product(&self, other: &Cdga) -> Cdga {
        TensorProduct::new(self, other).product
    }

    /// `A^{⊗n}`, left-associated.
    pub fn tensor_power(&self, n: usize) -> Result<Cdga, AlgebraError> {
        if n < 1 {
            return Err(AlgebraError::InvalidTensorPower(n));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.tensor_product(self);
        }
        Ok(acc)
    }
}
