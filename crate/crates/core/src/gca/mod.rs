//! Graded-commutative algebra kernel: monomials with Koszul signs, differentials, morphisms,
//! tensor products and degree-truncated bases.

mod algebra;
mod basis;
mod element;
mod monomial;
mod morphism;
mod tensor;

pub use algebra::{AlgebraId, Cdga, CdgaBuilder, NameStyle, PolySpec};
pub use basis::{first_non_surjective_degree, morphism_matrix, TruncatedAlgebra};
pub use element::{Element, Homogeneity};
pub use monomial::{Generator, Monomial};
pub use morphism::CdgaMorphism;
pub use tensor::TensorProduct;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    MismatchedAlgebras,
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` must have positive degree")]
    ZeroDegreeGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("degree mismatch for `{generator}`: expected {expected}, found {found}")]
    DegreeMismatch { generator: String, expected: usize, found: usize },
    #[error("`{0}` is not homogeneous")]
    InhomogeneousElement(String),
    #[error("d(d({0})) is not zero")]
    DifferentialNotSquareZero(String),
    #[error("relation {0} is not stable under d")]
    RelationNotStable(String),
    #[error("morphism does not commute with d on `{0}`")]
    NotChainMap(String),
    #[error("morphism does not send relation {0} to zero")]
    RelationNotPreserved(String),
    #[error("tensor power must be at least 1, got {0}")]
    InvalidTensorPower(usize),
}

#[cfg(test)]
mod tests;
