use std::collections::HashMap;
use std::sync::Arc;

use num::{BigInt, One, Zero};

use super::lexer::{tokenize, Tok, Token};
use super::{Diagnostic, DiagnosticKind, Location};
use crate::gca::{AlgebraError, Cdga, CdgaMorphism, Element, PolySpec};
use crate::linalg::Q;

const MAX_DEGREE: usize = 200;
const MAX_EXPONENT: u32 = 200;
/// Bound on `∏ (pure-power exponent)` over generators, a proxy for total dimension.
const MAX_DIMENSION_ESTIMATE: u128 = 1 << 20;

#[derive(Debug, Clone)]
struct Factor {
    name: String,
    exp: u32,
    at: Location,
}

#[derive(Debug, Clone)]
struct Term {
    coeff: Q,
    factors: Vec<Factor>,
    at: Location,
}

#[derive(Debug, Clone)]
struct Poly {
    terms: Vec<Term>,
}

#[derive(Debug, Clone)]
pub struct AlgebraDecl {
    pub name: String,
    pub at: Location,
    pub algebra: Arc<Cdga>,
}

#[derive(Debug, Clone)]
pub struct MorphismDecl {
    pub name: String,
    pub at: Location,
    pub source: String,
    pub target: String,
    pub morphism: CdgaMorphism,
}

/// Parsed and validated declarations, in file order.
#[derive(Debug, Clone, Default)]
pub struct ModelFile {
    pub algebras: Vec<AlgebraDecl>,
    pub morphisms: Vec<MorphismDecl>,
}

impl ModelFile {
    pub fn algebra(&self, name: &str) -> Option<&AlgebraDecl> {
        self.algebras.iter().find(|a| a.name == name)
    }

    pub fn morphism(&self, name: &str) -> Option<&MorphismDecl> {
        self.morphisms.iter().find(|m| m.name == name)
    }

    /// Name under which `algebra` was declared, matching structurally.
    pub fn name_of(&self, algebra: &Cdga) -> Option<&str> {
        self.algebras.iter().find(|a| *a.algebra == *algebra).map(|a| a.name.as_str())
    }
}

pub fn parse(text: &str) -> Result<ModelFile, Diagnostic> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, file: ModelFile::default(), names: HashMap::new() };
    p.file_rule()?;
    Ok(p.file)
}

/// Parses a polynomial against the generators of `algebra` (plain names as in model files).
pub fn parse_element(algebra: &Cdga, text: &str) -> Result<Element, Diagnostic> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, file: ModelFile::default(), names: HashMap::new() };
    let poly = p.poly()?;
    p.expect(Tok::Eof)?;
    let degrees = generator_degrees(algebra);
    check_names(&poly, &degrees)?;
    element(algebra, &poly)
        .map_err(|e| Diagnostic::new(DiagnosticKind::InvalidAlgebra, Location::start(), e.to_string()))
}

fn generator_degrees(algebra: &Cdga) -> HashMap<String, usize> {
    (0..algebra.generators().len()).map(|pos| (algebra.model_name(pos), algebra.generators()[pos].degree)).collect()
}

fn check_names(poly: &Poly, degrees: &HashMap<String, usize>) -> Result<(), Diagnostic> {
    for t in &poly.terms {
        for f in &t.factors {
            if !degrees.contains_key(&f.name) {
                return Err(Diagnostic::new(
                    DiagnosticKind::UnknownIdentifier,
                    f.at,
                    format!("unknown generator `{}`", f.name),
                ));
            }
        }
    }
    Ok(())
}

fn term_degree(t: &Term, degrees: &HashMap<String, usize>) -> usize {
    t.factors.iter().map(|f| degrees[&f.name] * f.exp as usize).sum()
}

fn check_degree(poly: &Poly, degrees: &HashMap<String, usize>, expected: usize, what: &str) -> Result<(), Diagnostic> {
    for t in &poly.terms {
        let found = term_degree(t, degrees);
        if found != expected && !t.coeff.is_zero() {
            return Err(Diagnostic::new(
                DiagnosticKind::DegreeMismatch,
                t.at,
                format!("{what} must have degree {expected}, found a term of degree {found}"),
            ));
        }
    }
    Ok(())
}

fn spec_of(poly: &Poly) -> PolySpec {
    poly.terms.iter().map(|t| (t.coeff.clone(), t.factors.iter().map(|f| (f.name.clone(), f.exp)).collect())).collect()
}

/// Element of a (possibly multi-slot) algebra, resolving model-file names.
fn element(algebra: &Cdga, poly: &Poly) -> Result<Element, AlgebraError> {
    let mut out = algebra.zero();
    for t in &poly.terms {
        let mut e = algebra.constant(t.coeff.clone());
        for f in &t.factors {
            let pos = (0..algebra.generators().len())
                .find(|&p| algebra.model_name(p) == f.name)
                .ok_or_else(|| AlgebraError::UnknownGenerator(f.name.clone()))?;
            for _ in 0..f.exp {
                e = algebra.multiply(&e, &algebra.generator_element(pos))?;
            }
        }
        out = out.try_add(&e)?;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    file: ModelFile,
    /// Declared names of either kind, for duplicate detection.
    names: HashMap<String, Location>,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> Diagnostic {
        let t = self.peek();
        Diagnostic::new(DiagnosticKind::Syntax, t.at, format!("expected {wanted}, found {}", t.tok.describe()))
    }

    fn expect(&mut self, tok: Tok) -> Result<Location, Diagnostic> {
        if self.peek().tok == tok {
            Ok(self.next().at)
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    fn ident(&mut self) -> Result<(String, Location), Diagnostic> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.next().at))
            }
            _ => Err(self.unexpected("an identifier")),
        }
    }

    fn keyword(&self, word: &str) -> bool {
        matches!(&self.peek().tok, Tok::Ident(s) if s == word)
    }

    fn nat(&mut self) -> Result<(BigInt, Location), Diagnostic> {
        match &self.peek().tok {
            Tok::Nat(s) => {
                let v: BigInt = s.parse().expect("digits");
                Ok((v, self.next().at))
            }
            _ => Err(self.unexpected("a number")),
        }
    }

    fn small_nat(&mut self, max: usize, what: &str) -> Result<(usize, Location), Diagnostic> {
        let (v, at) = self.nat()?;
        match usize::try_from(&v) {
            Ok(n) if n <= max => Ok((n, at)),
            _ => Err(Diagnostic::new(DiagnosticKind::TooLarge, at, format!("{what} {v} exceeds {max}"))),
        }
    }

    fn file_rule(&mut self) -> Result<(), Diagnostic> {
        loop {
            if self.keyword("algebra") {
                self.algebra()?;
            } else if self.keyword("morphism") {
                self.morphism()?;
            } else if self.peek().tok == Tok::Eof {
                return Ok(());
            } else {
                return Err(self.unexpected("`algebra` or `morphism`"));
            }
        }
    }

    fn declare(&mut self, name: &str, at: Location) -> Result<(), Diagnostic> {
        if let Some(prev) = self.names.get(name) {
            return Err(Diagnostic::new(
                DiagnosticKind::DuplicateDefinition,
                at,
                format!("`{name}` is already declared at {}:{}", prev.line, prev.column),
            ));
        }
        self.names.insert(name.to_string(), at);
        Ok(())
    }

    fn algebra(&mut self) -> Result<(), Diagnostic> {
        self.next();
        let (name, at) = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut gens: Vec<(String, usize, Location)> = Vec::new();
        let mut diffs: Vec<(String, Location, Poly)> = Vec::new();
        let mut rels: Vec<(Vec<Factor>, Location)> = Vec::new();
        loop {
            if self.keyword("gen") {
                self.next();
                let (g, gat) = self.ident()?;
                self.expect(Tok::Colon)?;
                let (deg, dat) = self.small_nat(MAX_DEGREE, "degree")?;
                self.expect(Tok::Semi)?;
                if gens.iter().any(|(h, _, _)| *h == g) {
                    return Err(Diagnostic::new(
                        DiagnosticKind::DuplicateDefinition,
                        gat,
                        format!("generator `{g}` declared twice"),
                    ));
                }
                if deg == 0 {
                    return Err(Diagnostic::new(
                        DiagnosticKind::InvalidAlgebra,
                        dat,
                        format!("generator `{g}` must have positive degree"),
                    ));
                }
                gens.push((g, deg, gat));
            } else if self.keyword("d") {
                self.next();
                let (g, gat) = self.ident()?;
                self.expect(Tok::Eq)?;
                let poly = self.poly()?;
                self.expect(Tok::Semi)?;
                diffs.push((g, gat, poly));
            } else if self.keyword("rel") {
                let rat = self.next().at;
                let m = self.mono()?;
                self.expect(Tok::Semi)?;
                rels.push((m, rat));
            } else if self.peek().tok == Tok::RBrace {
                self.next();
                break;
            } else {
                return Err(self.unexpected("`gen`, `d`, `rel` or `}`"));
            }
        }
        self.declare(&name, at)?;
        let algebra = build_algebra(&gens, &diffs, &rels, at)?;
        self.file.algebras.push(AlgebraDecl { name, at, algebra: Arc::new(algebra) });
        Ok(())
    }

    fn lookup_algebra(&self, name: &str, at: Location) -> Result<Arc<Cdga>, Diagnostic> {
        if let Some(a) = self.file.algebra(name) {
            return Ok(Arc::clone(&a.algebra));
        }
        if name == "Q" {
            return Ok(Arc::new(Cdga::ground_field()));
        }
        Err(Diagnostic::new(DiagnosticKind::UnknownIdentifier, at, format!("unknown algebra `{name}`")))
    }

    fn morphism(&mut self) -> Result<(), Diagnostic> {
        self.next();
        let (name, at) = self.ident()?;
        self.expect(Tok::Colon)?;
        let (src_name, src_at) = self.ident()?;
        self.expect(Tok::Arrow)?;
        let (tgt_name, tgt_at) = self.ident()?;
        self.expect(Tok::LBrace)?;
        let mut lines: Vec<(String, Location, Poly)> = Vec::new();
        while self.peek().tok != Tok::RBrace {
            let (g, gat) = self.ident().map_err(|_| self.unexpected("a generator or `}`"))?;
            self.expect(Tok::MapsTo)?;
            let poly = self.poly()?;
            self.expect(Tok::Semi)?;
            lines.push((g, gat, poly));
        }
        self.next();
        self.declare(&name, at)?;
        let source = self.lookup_algebra(&src_name, src_at)?;
        let target = self.lookup_algebra(&tgt_name, tgt_at)?;
        let morphism = build_morphism(&source, &target, &lines, at)?;
        self.file.morphisms.push(MorphismDecl { name, at, source: src_name, target: tgt_name, morphism });
        Ok(())
    }

    /// `poly := term (("+"|"-") term)*`, with an optional leading sign.
    fn poly(&mut self) -> Result<Poly, Diagnostic> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek().tok == Tok::Minus {
            self.next();
            negative = true;
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek().tok {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                _ => break,
            }
            self.next();
        }
        Ok(Poly { terms })
    }

    fn term(&mut self) -> Result<Term, Diagnostic> {
        let at = self.peek().at;
        if let Tok::Nat(_) = self.peek().tok {
            let (num, _) = self.nat()?;
            let mut coeff = Q::from_integer(num);
            if self.peek().tok == Tok::Slash {
                self.next();
                let (den, dat) = self.nat()?;
                if den.is_zero() {
                    return Err(Diagnostic::new(DiagnosticKind::Syntax, dat, "zero denominator"));
                }
                coeff /= Q::from_integer(den);
            }
            if self.peek().tok == Tok::Star {
                self.next();
                let factors = self.mono()?;
                return Ok(Term { coeff, factors, at });
            }
            return Ok(Term { coeff, factors: Vec::new(), at });
        }
        let factors = self.mono().map_err(|_| self.unexpected("a term"))?;
        Ok(Term { coeff: Q::one(), factors, at })
    }

    fn mono(&mut self) -> Result<Vec<Factor>, Diagnostic> {
        let mut out = Vec::new();
        loop {
            let (name, at) = self.ident()?;
            let mut exp = 1;
            if self.peek().tok == Tok::Caret {
                self.next();
                let (e, eat) = self.small_nat(MAX_EXPONENT as usize, "exponent")?;
                if e == 0 {
                    return Err(Diagnostic::new(DiagnosticKind::Syntax, eat, "exponents must be positive"));
                }
                exp = e as u32;
            }
            out.push(Factor { name, exp, at });
            if self.peek().tok != Tok::Star {
                return Ok(out);
            }
            self.next();
        }
    }
}

fn build_algebra(
    gens: &[(String, usize, Location)],
    diffs: &[(String, Location, Poly)],
    rels: &[(Vec<Factor>, Location)],
    at: Location,
) -> Result<Cdga, Diagnostic> {
    let degrees: HashMap<String, usize> = gens.iter().map(|(g, d, _)| (g.clone(), *d)).collect();
    for (factors, _) in rels {
        check_names(&Poly { terms: vec![Term { coeff: Q::one(), factors: factors.clone(), at }] }, &degrees)?;
    }
    let mut seen: HashMap<&str, Location> = HashMap::new();
    for (g, gat, poly) in diffs {
        let Some(&deg) = degrees.get(g) else {
            return Err(Diagnostic::new(DiagnosticKind::UnknownIdentifier, *gat, format!("unknown generator `{g}`")));
        };
        if seen.insert(g, *gat).is_some() {
            return Err(Diagnostic::new(DiagnosticKind::DuplicateDefinition, *gat, format!("d{g} given twice")));
        }
        check_names(poly, &degrees)?;
        check_degree(poly, &degrees, deg + 1, &format!("d{g}"))?;
    }
    check_size(gens, rels, at)?;

    let mut builder = Cdga::builder();
    for (g, d, _) in gens {
        builder = builder.generator(g.clone(), *d);
    }
    for (factors, _) in rels {
        builder = builder.relation_owned(factors.iter().map(|f| (f.name.clone(), f.exp)).collect());
    }
    for (g, _, poly) in diffs {
        builder = builder.differential(g.clone(), spec_of(poly));
    }
    builder.build().map_err(|e| {
        let locate = |name: &str| diffs.iter().find(|(g, _, _)| g == name).map_or(at, |(_, gat, _)| *gat);
        match &e {
            AlgebraError::DifferentialNotSquareZero(g) => {
                Diagnostic::new(DiagnosticKind::DifferentialNotSquareZero, locate(g), e.to_string())
            }
            AlgebraError::InvalidRelation(_) => {
                let rat = rels.first().map_or(at, |(_, r)| *r);
                Diagnostic::new(DiagnosticKind::InvalidAlgebra, rat, e.to_string())
            }
            _ => Diagnostic::new(DiagnosticKind::InvalidAlgebra, at, e.to_string()),
        }
    })
}

/// Rejects algebras whose finite-dimensional basis would be too large to enumerate.
fn check_size(
    gens: &[(String, usize, Location)],
    rels: &[(Vec<Factor>, Location)],
    at: Location,
) -> Result<(), Diagnostic> {
    let mut estimate: u128 = 1;
    for (g, d, _) in gens {
        let bound = if d % 2 == 1 {
            2
        } else {
            match rels.iter().filter(|(fs, _)| fs.len() == 1 && fs[0].name == *g).map(|(fs, _)| fs[0].exp).min() {
                Some(e) => e as u128,
                // Unbounded generators make the algebra infinite; enumeration then stops at N.
                None => return Ok(()),
            }
        };
        estimate = estimate.saturating_mul(bound);
    }
    if estimate > MAX_DIMENSION_ESTIMATE {
        return Err(Diagnostic::new(DiagnosticKind::TooLarge, at, "algebra is too large to enumerate"));
    }
    Ok(())
}

fn build_morphism(
    source: &Arc<Cdga>,
    target: &Arc<Cdga>,
    lines: &[(String, Location, Poly)],
    at: Location,
) -> Result<CdgaMorphism, Diagnostic> {
    let src_degrees = generator_degrees(source);
    let tgt_degrees = generator_degrees(target);
    let mut images: Vec<Option<(Element, Location)>> = vec![None; source.generators().len()];
    for (g, gat, poly) in lines {
        let Some(pos) = (0..source.generators().len()).find(|&p| source.model_name(p) == *g) else {
            return Err(Diagnostic::new(
                DiagnosticKind::UnknownIdentifier,
                *gat,
                format!("`{g}` is not a generator of the source"),
            ));
        };
        if images[pos].is_some() {
            return Err(Diagnostic::new(
                DiagnosticKind::DuplicateDefinition,
                *gat,
                format!("image of `{g}` given twice"),
            ));
        }
        check_names(poly, &tgt_degrees)?;
        check_degree(poly, &tgt_degrees, src_degrees[g], &format!("image of `{g}`"))?;
        let e =
            element(target, poly).map_err(|e| Diagnostic::new(DiagnosticKind::InvalidMorphism, *gat, e.to_string()))?;
        images[pos] = Some((e, *gat));
    }
    let locations: Vec<Location> = images.iter().map(|i| i.as_ref().map_or(at, |(_, l)| *l)).collect();
    let images: Vec<Element> = images
        .into_iter()
        .enumerate()
        .map(|(pos, img)| match img {
            Some((e, _)) => e,
            None => {
                let g = &source.generators()[pos];
                (0..target.generators().len())
                    .find(|&p| {
                        target.model_name(p) == source.model_name(pos) && target.generators()[p].degree == g.degree
                    })
                    .map_or_else(|| target.zero(), |p| target.generator_element(p))
            }
        })
        .collect();
    CdgaMorphism::new(Arc::clone(source), Arc::clone(target), images).map_err(|e| {
        let locate = |name: &str| {
            (0..source.generators().len()).find(|&p| source.model_name(p) == name).map_or(at, |p| locations[p])
        };
        match &e {
            AlgebraError::NotChainMap(g) => Diagnostic::new(DiagnosticKind::NotChainMap, locate(g), e.to_string()),
            AlgebraError::DegreeMismatch { generator, .. } => {
                Diagnostic::new(DiagnosticKind::DegreeMismatch, locate(generator), e.to_string())
            }
            _ => Diagnostic::new(DiagnosticKind::InvalidMorphism, at, e.to_string()),
        }
    })
}
