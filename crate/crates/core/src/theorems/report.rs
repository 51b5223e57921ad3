use serde::Serialize;

use crate::invariants::{Certification, InvariantResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    /// An operand is only a lower bound on the side where that could flip the outcome.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// One computed quantity of a report, e.g. `hsecat(φ₁)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportValue {
    pub label: String,
    pub value: u32,
    pub status: Certification,
    pub witness: Option<String>,
}

impl ReportValue {
    pub fn from_result(label: impl Into<String>, r: &InvariantResult) -> Self {
        Self {
            label: label.into(),
            value: r.value,
            status: r.status,
            witness: r.witness.as_ref().map(|w| w.rendered().to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "=")]
    Equal,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::AtMost => "<=",
            Relation::AtLeast => ">=",
            Relation::Equal => "=",
        }
    }
}

/// `lhs relation rhs`, where each side is a sum of report values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub relation: Relation,
    pub lhs: u32,
    pub rhs: u32,
    /// `rhs - lhs` for `<=`, `lhs - rhs` for `>=`, `0` or the difference for `=`.
    pub slack: i64,
    pub verdict: Verdict,
}

fn at_most(lhs: (u32, Certification), rhs: (u32, Certification)) -> Verdict {
    if lhs.1.is_exact() && lhs.0 <= rhs.0 {
        Verdict::Pass
    } else if rhs.1.is_exact() && lhs.0 > rhs.0 {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    }
}

impl Check {
    pub fn new(
        claim: impl Into<String>,
        relation: Relation,
        lhs: (u32, Certification),
        rhs: (u32, Certification),
    ) -> Self {
        let verdict = match relation {
            Relation::AtMost => at_most(lhs, rhs),
            Relation::AtLeast => at_most(rhs, lhs),
            Relation::Equal => match (at_most(lhs, rhs), at_most(rhs, lhs)) {
                (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
                (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
                _ => Verdict::Inconclusive,
            },
        };
        let slack = match relation {
            Relation::AtMost | Relation::Equal => rhs.0 as i64 - lhs.0 as i64,
            Relation::AtLeast => lhs.0 as i64 - rhs.0 as i64,
        };
        Self { claim: claim.into(), relation, lhs: lhs.0, rhs: rhs.0, slack, verdict }
    }
}

/// A degreewise subspace inclusion tested by membership.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub claim: String,
    pub degrees_checked: usize,
    pub failing_degree: Option<usize>,
}

impl InclusionCheck {
    pub fn holds(&self) -> bool {
        self.failing_degree.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: String,
    pub instance: String,
    pub truncation: usize,
    pub values: Vec<ReportValue>,
    pub checks: Vec<Check>,
    pub inclusions: Vec<InclusionCheck>,
}

impl VerificationReport {
    pub fn value(&self, label: &str) -> Option<&ReportValue> {
        self.values.iter().find(|v| v.label == label)
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == Verdict::Fail) || self.inclusions.iter().any(|i| !i.holds())
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == Verdict::Pass) && self.inclusions.iter().all(InclusionCheck::holds)
    }

    /// `pass` if every check passes, `fail` if any fails, `inconclusive` otherwise.
    pub fn verdict(&self) -> Verdict {
        if self.has_failures() {
            Verdict::Fail
        } else if self.all_pass() {
            Verdict::Pass
        } else {
            Verdict::Inconclusive
        }
    }

    pub(crate) fn sum(&self, labels: &[&str]) -> (u32, Certification) {
        labels.iter().fold((0, Certification::CertifiedExact), |(v, s), l| {
            let r = self.value(l).expect("value computed before the check");
            (v + r.value, s.meet(r.status))
        })
    }

    pub(crate) fn check(&mut self, lhs: &[&str], relation: Relation, rhs: &[&str]) {
        let claim = format!("{} {} {}", lhs.join(" + "), relation.symbol(), rhs.join(" + "));
        let check = Check::new(claim, relation, self.sum(lhs), self.sum(rhs));
        self.checks.push(check);
    }
}
