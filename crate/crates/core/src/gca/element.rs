use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num::{One, Zero};

use super::{AlgebraError, AlgebraId, Monomial};
use crate::linalg::Q;

/// Whether an element sits in a single degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Homogeneity {
    Zero,
    Degree(usize),
    Mixed,
}

/// A finite rational combination of monomials of one algebra. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub(crate) algebra: AlgebraId,
    pub(crate) terms: BTreeMap<Monomial, Q>,
}

impl Element {
    pub(crate) fn zero_in(algebra: AlgebraId) -> Self {
        Self { algebra, terms: BTreeMap::new() }
    }

    pub(crate) fn monomial_in(algebra: AlgebraId, m: Monomial, c: Q) -> Self {
        let mut e = Self::zero_in(algebra);
        e.add_term(m, c);
        e
    }

    pub fn algebra_id(&self) -> AlgebraId {
        self.algebra
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => Homogeneity::Zero,
            Some(d) if degrees.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    /// Degree of a homogeneous nonzero element.
    pub fn degree(&self) -> Option<usize> {
        match self.homogeneity() {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.algebra != other.algebra {
            return Err(AlgebraError::MismatchedAlgebras);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.scaled(&-Q::one()))
    }

    pub fn scaled(&self, c: &Q) -> Element {
        if c.is_zero() {
            return Self::zero_in(self.algebra);
        }
        Self { algebra: self.algebra, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn negated(&self) -> Element {
        self.scaled(&-Q::one())
    }
}
