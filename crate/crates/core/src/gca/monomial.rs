use std::cmp::Ordering;

/// A generator of a free graded-commutative algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: usize,
    /// Declaration position, 0-based.
    pub index: usize,
    /// Tensor factor the generator came from; 0 for algebras that are not tensor products.
    pub slot: usize,
}

impl Generator {
    pub fn is_odd(&self) -> bool {
        self.degree % 2 == 1
    }
}

/// A monomial, as an exponent vector over the generators in canonical order.
///
/// Odd generators carry exponent 0 or 1; the empty (all-zero) vector is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: usize,
}

impl Monomial {
    pub(crate) fn from_parts(exps: Vec<u32>, degree: usize) -> Self {
        Self { exps, degree }
    }

    pub fn unit(generators: usize) -> Self {
        Self { exps: vec![0; generators], degree: 0 }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_unit(&self) -> bool {
        self.degree == 0 && self.exps.iter().all(|&e| e == 0)
    }

    /// Whether `self` divides `other` as a commutative monomial.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// The (generator position, exponent) pairs with nonzero exponent.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i, e))
    }

    /// Total number of generator factors counted with multiplicity.
    pub fn length(&self) -> u32 {
        self.exps.iter().sum()
    }
}

/// Graded, then reverse lexicographic on exponents: within a degree, higher powers of
/// earlier generators come first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of two monomials over generators with the given parities.
///
/// Returns `None` when an odd generator would be squared, else the product and the Koszul sign
/// of sorting `u·v` into canonical order: one transposition per pair (odd factor of `u`, odd
/// factor of `v` sitting earlier in canonical order).
pub(crate) fn multiply_monomials(odd: &[bool], u: &Monomial, v: &Monomial) -> Option<(Monomial, bool)> {
    let mut exps = Vec::with_capacity(u.exps.len());
    let mut v_odd_seen = 0u32;
    let mut inversions = 0u32;
    for (i, (&a, &b)) in u.exps.iter().zip(&v.exps).enumerate() {
        if odd[i] {
            if a > 0 && b > 0 {
                return None;
            }
            if a > 0 {
                inversions += v_odd_seen;
            }
            v_odd_seen += b;
        }
        exps.push(a + b);
    }
    Some((Monomial { exps, degree: u.degree + v.degree }, inversions % 2 == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(exps: &[u32], degs: &[usize]) -> Monomial {
        let degree = exps.iter().zip(degs).map(|(&e, &d)| e as usize * d).sum();
        Monomial::from_parts(exps.to_vec(), degree)
    }

    #[test]
    fn odd_square_vanishes() {
        let x = mono(&[1], &[3]);
        assert!(multiply_monomials(&[true], &x, &x).is_none());
    }

    #[test]
    fn single_odd_transposition() {
        let degs = [1, 1];
        let x = mono(&[1, 0], &degs);
        let y = mono(&[0, 1], &degs);
        let (xy, neg) = multiply_monomials(&[true, true], &y, &x).unwrap();
        assert_eq!(xy.exponents(), &[1, 1]);
        assert!(neg);
        let (_, neg) = multiply_monomials(&[true, true], &x, &y).unwrap();
        assert!(!neg);
    }

    #[test]
    fn order_is_graded_then_reverse_lex() {
        let degs = [2, 3];
        let x2 = mono(&[2, 0], &degs);
        let y = mono(&[0, 1], &degs);
        let x = mono(&[1, 0], &degs);
        assert!(x < y && y < x2);
        let a = mono(&[1, 0, 0], &[2, 2, 2]);
        let b = mono(&[0, 1, 0], &[2, 2, 2]);
        assert!(a < b);
    }
}
