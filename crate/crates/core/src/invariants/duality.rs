use std::sync::Arc;

use serde::Serialize;

use super::InvariantError;
use crate::cohomology::{CohomologyRing, GradedRing};
use crate::gca::Cdga;
use crate::linalg::{unit_vec, RationalMatrix};

/// How the finiteness of `H(A)` was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Finiteness {
    /// `A` itself is finite-dimensional inside the window.
    Complete,
    /// No classes in the top third of the window.
    Detected,
    /// Classes reach into the top third of the window.
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingRank {
    pub degree: usize,
    pub complement: usize,
    pub dims: (usize, usize),
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoincareDualityReport {
    pub is_pd: bool,
    pub finiteness: Finiteness,
    pub formal_dimension: Option<usize>,
    /// Cycle representing the chosen generator of the top class.
    pub fundamental_class: Option<String>,
    pub pairing_ranks: Vec<PairingRank>,
    pub truncation: usize,
}

impl PoincareDualityReport {
    /// Whether the report settles the question either way.
    pub fn is_conclusive(&self) -> bool {
        self.finiteness != Finiteness::Undetermined
    }
}

pub fn check_poincare_duality(algebra: Arc<Cdga>, truncation: usize) -> Result<PoincareDualityReport, InvariantError> {
    let h = CohomologyRing::compute(algebra, truncation)?;
    Ok(poincare_duality_of(&h))
}

pub fn poincare_duality_of(h: &CohomologyRing) -> PoincareDualityReport {
    let window = h.window();
    let dims = h.dimensions();
    let finiteness = if h.is_complete() {
        Finiteness::Complete
    } else if (2 * window / 3 + 1..=window).all(|k| dims[k] == 0) {
        Finiteness::Detected
    } else {
        Finiteness::Undetermined
    };
    let mut report = PoincareDualityReport {
        is_pd: false,
        finiteness,
        formal_dimension: None,
        fundamental_class: None,
        pairing_ranks: Vec::new(),
        truncation: h.truncation(),
    };
    if finiteness == Finiteness::Undetermined {
        return report;
    }
    let n = (0..=window).rev().find(|&k| dims[k] > 0).unwrap_or(0);
    report.formal_dimension = Some(n);
    if dims[n] == 1 {
        report.fundamental_class = Some(h.render(n, &unit_vec(0)));
    }
    let mut perfect = dims[n] == 1;
    for k in 0..=n {
        let (a, b) = (dims[k], dims[n - k]);
        let rows: Vec<_> = (0..a)
            .map(|i| {
                (0..b)
                    .filter_map(|j| {
                        let c = h.multiply(k, &unit_vec(i), n - k, &unit_vec(j)).get(&0).cloned()?;
                        Some((j, c))
                    })
                    .collect()
            })
            .collect();
        let rank = if dims[n] == 1 { RationalMatrix::from_rows(rows, b).expect("rows fit").rank() } else { 0 };
        perfect &= rank == a && rank == b;
        report.pairing_ranks.push(PairingRank { degree: k, complement: n - k, dims: (a, b), rank });
    }
    report.is_pd = perfect;
    report
}
