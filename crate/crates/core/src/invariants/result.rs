use serde::Serialize;

use crate::linalg::SparseVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Every contributing degree of the ambient lies inside the truncation window.
    CertifiedExact,
    /// The true value is at least the reported one.
    CertifiedLowerBound,
}

impl Certification {
    pub fn is_exact(self) -> bool {
        self == Certification::CertifiedExact
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Certification::CertifiedExact => "certified-exact",
            Certification::CertifiedLowerBound => "certified-lower-bound",
        }
    }

    /// Exact only if both are.
    pub fn meet(self, other: Certification) -> Certification {
        if self.is_exact() && other.is_exact() {
            Certification::CertifiedExact
        } else {
            Certification::CertifiedLowerBound
        }
    }
}

/// A factor of a product witness: a vector in the given degree of the ambient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub degree: usize,
    pub vector: SparseVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `f_1 ⋯ f_m ≠ 0` with every `f_i` in the ideal.
    NonzeroProduct { degree: usize, factors: Vec<Factor>, product: SparseVec, rendered: String },
    /// A cycle of degree `degree` with nonzero class that becomes a boundary in the quotient by
    /// `K^{level+1}`. `factors`, when present, writes the cycle as a product of elements of `K`.
    InjectivityFailure { level: u32, degree: usize, cycle: SparseVec, factors: Option<Vec<Factor>>, rendered: String },
}

impl Witness {
    pub fn degree(&self) -> usize {
        match self {
            Witness::NonzeroProduct { degree, .. } | Witness::InjectivityFailure { degree, .. } => *degree,
        }
    }

    pub fn rendered(&self) -> &str {
        match self {
            Witness::NonzeroProduct { rendered, .. } | Witness::InjectivityFailure { rendered, .. } => rendered,
        }
    }

    pub fn level(&self) -> Option<u32> {
        match self {
            Witness::InjectivityFailure { level, .. } => Some(*level),
            Witness::NonzeroProduct { .. } => None,
        }
    }
}

/// The value of an invariant together with how far it is certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub name: String,
    pub value: u32,
    pub status: Certification,
    pub truncation: usize,
    /// The witness for the reported value (the failure one level below it, or the longest
    /// nonzero product).
    pub witness: Option<Witness>,
    /// For `hsecat`: one injectivity failure per level below the value, lowest level first.
    pub failures: Vec<Witness>,
    pub note: Option<String>,
}

impl InvariantResult {
    pub fn relabeled(mut self, name: impl Into<String>, note: impl Into<String>) -> Self {
        self.name = name.into();
        self.note = Some(note.into());
        self
    }
}

/// `f^2*g` style rendering of a product, grouping equal consecutive factors. Each factor comes
/// with a flag telling whether it is a bare monomial (printed without parentheses).
pub(crate) fn render_product(factors: &[(String, bool)]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        let (text, bare) = &factors[i];
        let count = j - i;
        // A lone factor needs no grouping; `@` binds looser than `*`, so slot notation does.
        let lone = count == 1 && factors.len() == 1;
        let base = if lone || (*bare && !text.contains('@')) { text.clone() } else { format!("({text})") };
        if count == 1 {
            parts.push(base);
        } else if *bare && text.contains(['^', '*']) && !text.contains('@') {
            parts.push(format!("({base})^{count}"));
        } else {
            parts.push(format!("{base}^{count}"));
        }
        i = j;
    }
    parts.join("*")
}
