//! The model file format, the catalog of standard models, references to catalog entries and
//! report output.

pub mod catalog;
mod emit;
mod lexer;
mod parser;
mod reference;
mod serialize;

use std::fmt;

pub use emit::{
    emit_cohomology, emit_duality, emit_invariant, emit_verification, emit_verification_batch, BatchSummary, Format,
};
pub use parser::{parse, parse_element, AlgebraDecl, ModelFile, MorphismDecl};
pub use reference::{parse_reference, Reference, ReferenceError, Resolver};
pub use serialize::{serialize_algebra, serialize_file, serialize_morphism};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl Location {
    pub fn start() -> Self {
        Self { line: 1, column: 1 }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    Syntax,
    UnknownIdentifier,
    DuplicateDefinition,
    DegreeMismatch,
    DifferentialNotSquareZero,
    NotChainMap,
    InvalidAlgebra,
    InvalidMorphism,
    TooLarge,
}

impl DiagnosticKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::UnknownIdentifier => "unknown identifier",
            DiagnosticKind::DuplicateDefinition => "duplicate definition",
            DiagnosticKind::DegreeMismatch => "degree mismatch",
            DiagnosticKind::DifferentialNotSquareZero => "d^2 is not zero",
            DiagnosticKind::NotChainMap => "morphism does not commute with d",
            DiagnosticKind::InvalidAlgebra => "invalid algebra",
            DiagnosticKind::InvalidMorphism => "invalid morphism",
            DiagnosticKind::TooLarge => "too large",
        }
    }

    /// Whether the text parsed but describes an invalid object (as opposed to malformed text).
    pub fn is_validation(self) -> bool {
        !matches!(
            self,
            DiagnosticKind::Syntax | DiagnosticKind::UnknownIdentifier | DiagnosticKind::DuplicateDefinition
        )
    }
}

/// A located error from reading a model file.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{at}: {}: {message}", kind.as_str())]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub at: Location,
    pub message: String,
}

impl Diagnostic {
    pub fn new(kind: DiagnosticKind, at: Location, message: impl Into<String>) -> Self {
        Self { kind, at, message: message.into() }
    }
}

#[cfg(test)]
mod tests;
