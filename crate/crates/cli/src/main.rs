//! `secat`: cohomology, sectional-category invariants and product checks from the command line.
//!
//! Exit codes: 0 success, 1 parse or usage error, 2 invalid algebra or morphism, 3 unmet
//! precondition, 4 a verification check failed.

use std::fmt::Write as _;
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use secat::cohomology::{CohomologyError, CohomologyRing};
use secat::gca::{Cdga, CdgaMorphism};
use secat::invariants::{self, check_poincare_duality, InvariantError, InvariantResult};
use secat::model_io::{
    self, emit_cohomology, emit_duality, emit_invariant, emit_verification, emit_verification_batch, parse_reference,
    serialize_algebra, serialize_morphism, BatchSummary, Format, ModelFile, Reference, ReferenceError, Resolver,
};
use secat::theorems::{self, SizeParams, Verdict, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "secat", version, about = "Rational sectional-category invariants of CDGA models")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, env = "SECAT_FORMAT", value_parser = parse_format, default_value = "human")]
    format: Format,

    /// Model file whose algebra and morphism names become available to references.
    #[arg(long, global = true, value_name = "FILE")]
    model: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse()
}

#[derive(Args, Debug, Clone)]
struct AlgebraArg {
    /// Algebra reference, e.g. `cpn:2`, `product(sphere:2,sphere:3)` or a model-file name.
    #[arg(long, alias = "algebra", value_name = "REF")]
    catalog: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology ring of an algebra, with its Poincaré duality check.
    Cohomology {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Truncation degree.
        #[arg(short = 'N', long = "truncation")]
        truncation: Option<usize>,
    },
    /// One invariant of a morphism (or, for cup-length, of an algebra).
    Invariant {
        #[arg(long, value_enum)]
        invariant: InvariantName,
        /// Morphism reference, e.g. `aug(cpn:2)`, `mult(sphere:2,2)` or a model-file name.
        #[arg(long, value_name = "REF", required_unless_present = "catalog")]
        morphism: Option<String>,
        /// Algebra reference for cup-length.
        #[arg(long, alias = "algebra", value_name = "REF")]
        catalog: Option<String>,
        #[arg(short = 'N', long = "truncation")]
        truncation: Option<usize>,
    },
    /// Higher topological complexity `htc_n`, reported as `mtc_n` under Poincaré duality.
    Tc {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        #[arg(short = 'N', long = "truncation")]
        truncation: Option<usize>,
    },
    /// Checks of the product inequalities.
    Verify {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Left morphism (product mode).
        #[arg(long, value_name = "REF")]
        left: Option<String>,
        /// Right morphism (product mode).
        #[arg(long, value_name = "REF")]
        right: Option<String>,
        /// Algebra (sphere-additivity mode).
        #[arg(long, alias = "algebra", value_name = "REF")]
        catalog: Option<String>,
        /// Sphere dimension (sphere-additivity mode).
        #[arg(long)]
        k: Option<usize>,
        #[arg(short = 'n', default_value_t = 2)]
        n: usize,
        /// Inclusive seed range `a..b` (fuzz mode).
        #[arg(long, value_parser = parse_seeds, default_value = "0..199")]
        seeds: RangeInclusive<u64>,
        #[arg(short = 'N', long = "truncation")]
        truncation: Option<usize>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum InvariantName {
    Hsecat,
    NilKer,
    CupLength,
    MsecatPd,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum Mode {
    Product,
    SphereAdditivity,
    Fuzz,
}

fn parse_seeds(s: &str) -> Result<RangeInclusive<u64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected `a..b`, found `{s}`"))?;
    let a: u64 = a.trim().parse().map_err(|_| format!("bad seed `{a}`"))?;
    let b: u64 = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad seed `{b}`"))?;
    if a > b {
        return Err(format!("empty seed range {a}..{b}"));
    }
    Ok(a..=b)
}

/// An error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self { code, message: message.into() }
    }
}

impl From<ReferenceError> for Failure {
    fn from(e: ReferenceError) -> Self {
        Failure::new(1, format!("reference: {e}"))
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        let code = match &e {
            InvariantError::NotSurjective { .. }
            | InvariantError::PoincareDualityNotEstablished
            | InvariantError::InvalidTensorPower(_)
            | InvariantError::InvalidParameter(_)
            | InvariantError::Cohomology(CohomologyError::TruncationTooSmall) => 3,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<CohomologyError> for Failure {
    fn from(e: CohomologyError) -> Self {
        InvariantError::from(e).into()
    }
}

struct Context {
    format: Format,
    file: Option<ModelFile>,
    out: String,
}

impl Context {
    fn resolver(&self) -> Resolver<'_> {
        Resolver::new(self.file.as_ref())
    }

    fn reference(&self, text: &str) -> Result<(Reference, String), Failure> {
        let r = parse_reference(text)?;
        let name = r.to_string();
        Ok((r, name))
    }

    fn algebra(&self, text: &str) -> Result<(Arc<Cdga>, String), Failure> {
        let (r, name) = self.reference(text)?;
        Ok((self.resolver().algebra(&r)?, name))
    }

    fn morphism(&self, text: &str) -> Result<(CdgaMorphism, String), Failure> {
        let (r, name) = self.reference(text)?;
        Ok((self.resolver().morphism(&r)?, name))
    }
}

fn load_model(path: &PathBuf) -> Result<ModelFile, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure::new(1, format!("cannot read {}: {e}", path.display())))?;
    model_io::parse(&text).map_err(|d| {
        let code = if d.kind.is_validation() { 2 } else { 1 };
        Failure::new(code, format!("{}:{d}", path.display()))
    })
}

fn cohomology(ctx: &mut Context, algebra: &AlgebraArg, truncation: Option<usize>) -> Result<(), Failure> {
    let (a, name) = ctx.algebra(&algebra.catalog)?;
    let n = truncation.unwrap_or_else(|| a.default_truncation());
    let h = CohomologyRing::compute(Arc::clone(&a), n)?;
    let pd = invariants::poincare_duality_of(&h);
    ctx.out.push_str(&emit_cohomology(&name, &h, ctx.format));
    if ctx.format == Format::Human {
        ctx.out.push('\n');
    }
    ctx.out.push_str(&emit_duality(&name, &pd, ctx.format));
    Ok(())
}

fn invariant(
    ctx: &mut Context,
    which: InvariantName,
    morphism: Option<&str>,
    algebra: Option<&str>,
    truncation: Option<usize>,
) -> Result<(), Failure> {
    let (result, name): (InvariantResult, String) = match (which, algebra) {
        (InvariantName::CupLength, Some(text)) => {
            let (a, name) = ctx.algebra(text)?;
            let n = truncation.unwrap_or_else(|| a.default_truncation());
            (invariants::cup_length(a, n)?, name)
        }
        _ => {
            let text = morphism.ok_or_else(|| Failure::new(1, "--morphism is required for this invariant"))?;
            let (phi, name) = ctx.morphism(text)?;
            let n = truncation.unwrap_or_else(|| invariants::default_truncation(&phi));
            let r = match which {
                InvariantName::Hsecat => invariants::hsecat(&phi, n)?,
                InvariantName::NilKer => invariants::nil_ker_h(&phi, n)?,
                InvariantName::CupLength => invariants::cup_length(Arc::clone(phi.source()), n)?,
                InvariantName::MsecatPd => invariants::msecat_pd(&phi, n)?,
            };
            (r, name)
        }
    };
    ctx.out.push_str(&emit_invariant(&name, &result, ctx.format));
    Ok(())
}

fn tc(ctx: &mut Context, algebra: &AlgebraArg, n: usize, truncation: Option<usize>) -> Result<(), Failure> {
    let (a, name) = ctx.algebra(&algebra.catalog)?;
    if n < 2 {
        return Err(InvariantError::InvalidTensorPower(n).into());
    }
    let mu = CdgaMorphism::multiplication(Arc::clone(&a), n).map_err(|e| Failure::new(2, e.to_string()))?;
    let trunc = truncation.unwrap_or_else(|| invariants::default_truncation(&mu));
    let mut result = invariants::htc(Arc::clone(&a), n, trunc)?;
    let pd = check_poincare_duality(a, trunc)?;
    if pd.is_pd {
        let dim = pd.formal_dimension.unwrap_or(0);
        result = result.relabeled(
            format!("mtc_{n}"),
            format!("equals htc_{n}: the algebra satisfies Poincaré duality in dimension {dim}"),
        );
    }
    ctx.out.push_str(&emit_invariant(&name, &result, ctx.format));
    Ok(())
}

/// Model-file text reproducing a pair of morphisms.
fn reproduction(phi1: &CdgaMorphism, phi2: &CdgaMorphism) -> String {
    let mut text = String::new();
    for (i, phi) in [phi1, phi2].into_iter().enumerate() {
        let (a, b) = (format!("A{}", i + 1), format!("B{}", i + 1));
        text.push_str(&serialize_algebra(&a, phi.source()));
        text.push_str(&serialize_algebra(&b, phi.target()));
        text.push_str(&serialize_morphism(&format!("phi{}", i + 1), &a, &b, phi));
    }
    text
}

fn report_failure(pair: (&CdgaMorphism, &CdgaMorphism), label: &str) {
    let mut err = String::new();
    let _ = writeln!(err, "check failed for {label}; reproduce with this model file:");
    err.push_str(&reproduction(pair.0, pair.1));
    eprint!("{err}");
}

fn verify_pair(ctx: &mut Context, left: &str, right: &str, truncation: Option<usize>) -> Result<bool, Failure> {
    let (phi1, n1) = ctx.morphism(left)?;
    let (phi2, n2) = ctx.morphism(right)?;
    let product = phi1.tensor(&phi2).map_err(|e| Failure::new(2, e.to_string()))?;
    let n = truncation.unwrap_or_else(|| invariants::default_truncation(&product));
    let label = format!("phi1: {n1}; phi2: {n2}");
    let mut reports =
        [theorems::verify_subadditivity(&phi1, &phi2, n)?, theorems::verify_lower_chain(&phi1, &phi2, n)?];
    let mut ok = true;
    for (i, r) in reports.iter_mut().enumerate() {
        r.instance = label.clone();
        if i > 0 && ctx.format == Format::Human {
            ctx.out.push('\n');
        }
        ctx.out.push_str(&emit_verification(r, ctx.format));
        ok &= r.verdict() != Verdict::Fail;
    }
    if !ok {
        report_failure((&phi1, &phi2), &label);
    }
    Ok(ok)
}

fn verify_sphere(
    ctx: &mut Context,
    algebra: &str,
    k: usize,
    n: usize,
    truncation: Option<usize>,
) -> Result<bool, Failure> {
    let (a, name) = ctx.algebra(algebra)?;
    let mut report: VerificationReport = theorems::verify_sphere_additivity(a, k, n, truncation)?;
    report.instance = format!("A: {name}; k: {k}; n: {n}");
    ctx.out.push_str(&emit_verification(&report, ctx.format));
    if report.verdict() == Verdict::Fail {
        eprintln!("check failed for {}", report.instance);
    }
    Ok(report.verdict() != Verdict::Fail)
}

fn verify_fuzz(ctx: &mut Context, seeds: RangeInclusive<u64>) -> Result<bool, Failure> {
    let params = SizeParams::default();
    let range = *seeds.start()..seeds.end().saturating_add(1);
    let outcomes = theorems::verify_batch(range.clone(), &params);
    let mut summary = BatchSummary::default();
    let mut rows = vec![vec!["seed".to_string(), "N".into(), "subadditivity".into(), "lower chain".into()]];
    for (seed, outcome) in range.zip(outcomes) {
        match outcome {
            Ok(o) => {
                summary.add(o.verdict());
                match ctx.format {
                    Format::Records => {
                        ctx.out.push_str(&emit_verification(&o.subadditivity, ctx.format));
                        ctx.out.push_str(&emit_verification(&o.lower_chain, ctx.format));
                    }
                    Format::Human => rows.push(vec![
                        seed.to_string(),
                        o.subadditivity.truncation.to_string(),
                        o.subadditivity.verdict().as_str().into(),
                        o.lower_chain.verdict().as_str().into(),
                    ]),
                }
                if o.verdict() == Verdict::Fail {
                    let inst = theorems::random_instance(seed, &params);
                    report_failure((&inst.phi1, &inst.phi2), &format!("seed {seed}"));
                }
            }
            Err(e) => {
                summary.errors += 1;
                eprintln!("seed {seed}: {e}");
                let inst = theorems::random_instance(seed, &params);
                report_failure((&inst.phi1, &inst.phi2), &format!("seed {seed}"));
            }
        }
    }
    if ctx.format == Format::Human {
        let width: Vec<usize> = (0..4).map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0)).collect();
        for r in &rows {
            let line: Vec<String> = r.iter().zip(&width).map(|(cell, w)| format!("{cell:<w$}")).collect();
            let _ = writeln!(ctx.out, "{}", line.join("  ").trim_end());
        }
        ctx.out.push('\n');
    }
    ctx.out.push_str(&emit_verification_batch(&summary, ctx.format));
    Ok(summary.fail == 0 && summary.errors == 0)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let file = cli.model.as_ref().map(load_model).transpose()?;
    let mut ctx = Context { format: cli.format, file, out: String::new() };
    let passed = match cli.command {
        Command::Cohomology { algebra, truncation } => cohomology(&mut ctx, &algebra, truncation).map(|_| true)?,
        Command::Invariant { invariant: which, morphism, catalog, truncation } => {
            invariant(&mut ctx, which, morphism.as_deref(), catalog.as_deref(), truncation).map(|_| true)?
        }
        Command::Tc { algebra, n, truncation } => tc(&mut ctx, &algebra, n, truncation).map(|_| true)?,
        Command::Verify { mode, left, right, catalog, k, n, seeds, truncation } => match mode {
            Mode::Product => {
                let left = left.ok_or_else(|| Failure::new(1, "--left is required in product mode"))?;
                let right = right.ok_or_else(|| Failure::new(1, "--right is required in product mode"))?;
                verify_pair(&mut ctx, &left, &right, truncation)?
            }
            Mode::SphereAdditivity => {
                let algebra =
                    catalog.ok_or_else(|| Failure::new(1, "--catalog is required in sphere-additivity mode"))?;
                let k = k.ok_or_else(|| Failure::new(1, "--k is required in sphere-additivity mode"))?;
                verify_sphere(&mut ctx, &algebra, k, n, truncation)?
            }
            Mode::Fuzz => verify_fuzz(&mut ctx, seeds)?,
        },
    };
    if passed {
        Ok(ctx.out)
    } else {
        Err(Failure { code: 4, message: ctx.out })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code: 4, message }) => {
            print!("{message}");
            let _ = std::io::stdout().flush();
            ExitCode::from(4)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
