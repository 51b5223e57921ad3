use std::str::FromStr;

use serde::Serialize;

use crate::cohomology::{CohomologyRing, GradedRing};
use crate::invariants::{InvariantResult, PoincareDualityReport, Witness};
use crate::linalg::unit_vec;
use crate::theorems::{Verdict, VerificationReport};

/// `human`: aligned tables. `records`: one JSON object per line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Records,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "human" => Ok(Format::Human),
            "records" => Ok(Format::Records),
            other => Err(format!("unknown format `{other}` (expected human or records)")),
        }
    }
}

fn record<T: Serialize>(value: &T) -> String {
    let mut line = serde_json::to_string(value).expect("records serialize");
    line.push('\n');
    line
}

/// Left-aligned columns separated by two spaces; trailing blanks trimmed.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        let mut line = String::new();
        for (c, cell) in r.iter().enumerate() {
            line.push_str(cell);
            if c + 1 < r.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count() + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn kv(pairs: &[(&str, String)]) -> String {
    table(&pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect::<Vec<_>>())
}

#[derive(Serialize)]
struct FailureRecord<'a> {
    level: Option<u32>,
    degree: usize,
    witness: &'a str,
}

#[derive(Serialize)]
struct InvariantRecord<'a> {
    record: &'static str,
    instance: &'a str,
    name: &'a str,
    value: u32,
    status: &'static str,
    truncation: usize,
    witness: Option<&'a str>,
    witness_level: Option<u32>,
    witness_degree: Option<usize>,
    failures: Vec<FailureRecord<'a>>,
    note: Option<&'a str>,
}

fn describe_witness(w: &Witness) -> String {
    match w.level() {
        Some(level) => format!("{}  (m = {level} fails in degree {})", w.rendered(), w.degree()),
        None => format!("{}  (nonzero in degree {})", w.rendered(), w.degree()),
    }
}

pub fn emit_invariant(instance: &str, r: &InvariantResult, format: Format) -> String {
    match format {
        Format::Records => record(&InvariantRecord {
            record: "invariant",
            instance,
            name: &r.name,
            value: r.value,
            status: r.status.as_str(),
            truncation: r.truncation,
            witness: r.witness.as_ref().map(Witness::rendered),
            witness_level: r.witness.as_ref().and_then(Witness::level),
            witness_degree: r.witness.as_ref().map(Witness::degree),
            failures: r
                .failures
                .iter()
                .map(|w| FailureRecord { level: w.level(), degree: w.degree(), witness: w.rendered() })
                .collect(),
            note: r.note.as_deref(),
        }),
        Format::Human => {
            let mut pairs = vec![
                ("instance", instance.to_string()),
                ("invariant", r.name.clone()),
                ("value", r.value.to_string()),
                ("status", r.status.as_str().to_string()),
                ("truncation", r.truncation.to_string()),
            ];
            if let Some(w) = &r.witness {
                pairs.push(("witness", describe_witness(w)));
            }
            if let Some(n) = &r.note {
                pairs.push(("note", n.clone()));
            }
            kv(&pairs)
        }
    }
}

#[derive(Serialize)]
struct VerificationRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    report: &'a VerificationReport,
    verdict: Verdict,
}

pub fn emit_verification(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Records => record(&VerificationRecord { record: "verification", report: r, verdict: r.verdict() }),
        Format::Human => {
            let mut out = kv(&[
                ("check", r.kind.clone()),
                ("instance", r.instance.clone()),
                ("truncation", r.truncation.to_string()),
                ("verdict", r.verdict().as_str().to_string()),
            ]);
            out.push('\n');
            let mut rows = vec![vec!["quantity".to_string(), "value".into(), "status".into(), "witness".into()]];
            for v in &r.values {
                rows.push(vec![
                    v.label.clone(),
                    v.value.to_string(),
                    v.status.as_str().into(),
                    v.witness.clone().unwrap_or_default(),
                ]);
            }
            out.push_str(&table(&rows));
            out.push('\n');
            let mut rows =
                vec![vec!["claim".to_string(), "lhs".into(), "rhs".into(), "slack".into(), "verdict".into()]];
            for c in &r.checks {
                rows.push(vec![
                    c.claim.clone(),
                    c.lhs.to_string(),
                    c.rhs.to_string(),
                    c.slack.to_string(),
                    c.verdict.as_str().into(),
                ]);
            }
            for i in &r.inclusions {
                let verdict = match i.failing_degree {
                    None => "pass".to_string(),
                    Some(d) => format!("fail (degree {d})"),
                };
                rows.push(vec![i.claim.clone(), String::new(), String::new(), String::new(), verdict]);
            }
            out.push_str(&table(&rows));
            out
        }
    }
}

/// Verdict counts over a batch.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
    pub errors: usize,
}

impl BatchSummary {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
    }
}

#[derive(Serialize)]
struct SummaryRecord<'a> {
    record: &'static str,
    #[serde(flatten)]
    summary: &'a BatchSummary,
}

pub fn emit_verification_batch(summary: &BatchSummary, format: Format) -> String {
    match format {
        Format::Records => record(&SummaryRecord { record: "summary", summary }),
        Format::Human => kv(&[
            ("pass", summary.pass.to_string()),
            ("fail", summary.fail.to_string()),
            ("inconclusive", summary.inconclusive.to_string()),
            ("errors", summary.errors.to_string()),
        ]),
    }
}

#[derive(Serialize)]
struct ProductRecord {
    left: String,
    right: String,
    product: String,
}

#[derive(Serialize)]
struct ClassRecord {
    degree: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct CohomologyRecord<'a> {
    record: &'static str,
    instance: &'a str,
    truncation: usize,
    certified_top: usize,
    dimensions: Vec<usize>,
    classes: Vec<ClassRecord>,
    products: Vec<ProductRecord>,
}

/// Nonzero products of basis classes `[u]·[v]` with `deg u ≤ deg v`, positive degrees only.
fn products(h: &CohomologyRing) -> Vec<ProductRecord> {
    let top = h.certified_top();
    let mut out = Vec::new();
    for i in 1..=top {
        for j in i..=top - i {
            for a in 0..h.dim(i) {
                for b in 0..h.dim(j) {
                    if i == j && b < a {
                        continue;
                    }
                    let p = h.multiply(i, &unit_vec(a), j, &unit_vec(b));
                    if p.is_empty() {
                        continue;
                    }
                    out.push(ProductRecord {
                        left: h.render(i, &unit_vec(a)),
                        right: h.render(j, &unit_vec(b)),
                        product: h.render(i + j, &p),
                    });
                }
            }
        }
    }
    out
}

pub fn emit_cohomology(instance: &str, h: &CohomologyRing, format: Format) -> String {
    let classes: Vec<ClassRecord> = (0..=h.certified_top())
        .filter(|&k| h.dim(k) > 0)
        .map(|k| ClassRecord { degree: k, basis: (0..h.dim(k)).map(|i| h.render(k, &unit_vec(i))).collect() })
        .collect();
    let products = products(h);
    match format {
        Format::Records => record(&CohomologyRecord {
            record: "cohomology",
            instance,
            truncation: h.truncation(),
            certified_top: h.certified_top(),
            dimensions: h.dimensions(),
            classes,
            products,
        }),
        Format::Human => {
            let mut out = kv(&[
                ("instance", instance.to_string()),
                ("truncation", h.truncation().to_string()),
                ("certified", format!("degrees 0..={}", h.certified_top())),
            ]);
            out.push('\n');
            let mut rows = vec![vec!["degree".to_string(), "dim".into(), "basis".into()]];
            for c in &classes {
                rows.push(vec![c.degree.to_string(), c.basis.len().to_string(), c.basis.join(", ")]);
            }
            out.push_str(&table(&rows));
            if !products.is_empty() {
                out.push('\n');
                let rows: Vec<Vec<String>> = products
                    .iter()
                    .map(|p| {
                        vec![
                            format!("[{}]", p.left),
                            "*".into(),
                            format!("[{}]", p.right),
                            "=".into(),
                            p.product.clone(),
                        ]
                    })
                    .collect();
                out.push_str(&table(&rows));
            }
            out
        }
    }
}

#[derive(Serialize)]
struct DualityRecord<'a> {
    record: &'static str,
    instance: &'a str,
    #[serde(flatten)]
    report: &'a PoincareDualityReport,
}

pub fn emit_duality(instance: &str, r: &PoincareDualityReport, format: Format) -> String {
    match format {
        Format::Records => record(&DualityRecord { record: "poincare-duality", instance, report: r }),
        Format::Human => {
            let mut pairs = vec![
                ("instance", instance.to_string()),
                ("poincare duality", if r.is_pd { "yes".into() } else { "no".into() }),
                ("finiteness", serde_json::to_value(r.finiteness).unwrap().as_str().unwrap_or_default().to_string()),
                ("truncation", r.truncation.to_string()),
            ];
            if let Some(n) = r.formal_dimension {
                pairs.push(("formal dimension", n.to_string()));
            }
            if let Some(c) = &r.fundamental_class {
                pairs.push(("fundamental class", c.clone()));
            }
            let mut out = kv(&pairs);
            if !r.pairing_ranks.is_empty() {
                out.push('\n');
                let mut rows = vec![vec!["pairing".to_string(), "dims".into(), "rank".into()]];
                for p in &r.pairing_ranks {
                    rows.push(vec![
                        format!("H^{} x H^{}", p.degree, p.complement),
                        format!("{} x {}", p.dims.0, p.dims.1),
                        p.rank.to_string(),
                    ]);
                }
                out.push_str(&table(&rows));
            }
            out
        }
    }
}
