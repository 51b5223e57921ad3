//! Inline references such as `sphere:2`, `product(cpn:2,sphere:3)`, `aug(cpn:2)` or
//! `mult(cohomology-sphere:2,3)`, resolved against the catalog and an optional model file.

use std::fmt;
use std::sync::Arc;

use super::catalog::{self, CatalogSpec};
use super::ModelFile;
use crate::gca::{Cdga, CdgaMorphism};

const MAX_PARAMETER: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {column}: {message}")]
pub struct ReferenceError {
    pub column: usize,
    pub message: String,
}

fn err<T>(column: usize, message: impl Into<String>) -> Result<T, ReferenceError> {
    Err(ReferenceError { column, message: message.into() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reference {
    Number {
        value: u64,
        column: usize,
    },
    /// `name` or `name:param`.
    Entry {
        name: String,
        param: Option<u64>,
        column: usize,
    },
    Call {
        name: String,
        args: Vec<Reference>,
        column: usize,
    },
}

impl Reference {
    pub fn column(&self) -> usize {
        match self {
            Reference::Number { column, .. } | Reference::Entry { column, .. } | Reference::Call { column, .. } => {
                *column
            }
        }
    }
}

impl fmt::Display for Reference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reference::Number { value, .. } => write!(f, "{value}"),
            Reference::Entry { name, param: None, .. } => write!(f, "{name}"),
            Reference::Entry { name, param: Some(p), .. } => write!(f, "{name}:{p}"),
            Reference::Call { name, args, .. } => {
                let args: Vec<String> = args.iter().map(ToString::to_string).collect();
                write!(f, "{name}({})", args.join(","))
            }
        }
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn number(&mut self) -> Result<u64, ReferenceError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start + 1, "expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse::<u64>() {
            Ok(v) if v <= MAX_PARAMETER => Ok(v),
            _ => err(start + 1, format!("parameter {digits} exceeds {MAX_PARAMETER}")),
        }
    }

    fn reference(&mut self, depth: usize) -> Result<Reference, ReferenceError> {
        if depth > 16 {
            return err(self.column(), "reference nested too deeply");
        }
        let column = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let column = self.column();
                return Ok(Reference::Number { value: self.number()?, column });
            }
            Some(c) if c.is_ascii_alphabetic() => self.column(),
            Some(c) => return err(self.column(), format!("unexpected `{c}`")),
            None => return err(self.column(), "expected a reference"),
        };
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_' || c == '-') {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match self.peek() {
            Some(':') => {
                self.pos += 1;
                let param = self.number()?;
                Ok(Reference::Entry { name, param: Some(param), column })
            }
            Some('(') => {
                self.pos += 1;
                let mut args = vec![self.reference(depth + 1)?];
                loop {
                    match self.peek() {
                        Some(',') => {
                            self.pos += 1;
                            args.push(self.reference(depth + 1)?);
                        }
                        Some(')') => {
                            self.pos += 1;
                            break;
                        }
                        Some(c) => return err(self.column(), format!("expected `,` or `)`, found `{c}`")),
                        None => return err(self.column(), "unclosed `(`"),
                    }
                }
                Ok(Reference::Call { name, args, column })
            }
            _ => Ok(Reference::Entry { name, param: None, column }),
        }
    }
}

pub fn parse_reference(text: &str) -> Result<Reference, ReferenceError> {
    let mut cur = Cursor { chars: text.chars().collect(), pos: 0 };
    let r = cur.reference(0)?;
    if let Some(c) = cur.peek() {
        return err(cur.column(), format!("unexpected `{c}` after the reference"));
    }
    Ok(r)
}

/// Resolves references to algebras and morphisms. Names from the model file take precedence
/// over catalog names.
#[derive(Debug, Clone, Copy, Default)]
pub struct Resolver<'a> {
    file: Option<&'a ModelFile>,
}

impl<'a> Resolver<'a> {
    pub fn new(file: Option<&'a ModelFile>) -> Self {
        Self { file }
    }

    /// The catalog description of an algebra reference, when it names catalog entries only.
    pub fn catalog_spec(&self, r: &Reference) -> Option<CatalogSpec> {
        match r {
            Reference::Entry { name, param, .. } => {
                if self.file.and_then(|f| f.algebra(name)).is_some() {
                    return None;
                }
                CatalogSpec::from_name(name, param.map(|p| p as usize)).ok()
            }
            Reference::Call { name, args, .. } if name == "product" && args.len() == 2 => Some(CatalogSpec::Product(
                Box::new(self.catalog_spec(&args[0])?),
                Box::new(self.catalog_spec(&args[1])?),
            )),
            _ => None,
        }
    }

    pub fn algebra(&self, r: &Reference) -> Result<Arc<Cdga>, ReferenceError> {
        match r {
            Reference::Number { column, .. } => err(*column, "expected an algebra, found a number"),
            Reference::Entry { name, param, column } => {
                if param.is_none() {
                    if let Some(a) = self.file.and_then(|f| f.algebra(name)) {
                        return Ok(Arc::clone(&a.algebra));
                    }
                    if name == "Q" {
                        return Ok(Arc::new(Cdga::ground_field()));
                    }
                }
                match CatalogSpec::from_name(name, param.map(|p| p as usize)) {
                    Ok(spec) => Ok(Arc::new(spec.build())),
                    Err(e) => err(*column, e.to_string()),
                }
            }
            Reference::Call { name, args, column } if name == "product" => {
                if args.len() < 2 {
                    return err(*column, "product needs at least two factors");
                }
                let mut acc = (*self.algebra(&args[0])?).clone();
                for a in &args[1..] {
                    acc = acc.tensor_product(&*self.algebra(a)?);
                }
                Ok(Arc::new(acc))
            }
            Reference::Call { name, column, .. } => err(*column, format!("`{name}(…)` is not an algebra")),
        }
    }

    pub fn morphism(&self, r: &Reference) -> Result<CdgaMorphism, ReferenceError> {
        match r {
            Reference::Number { column, .. } => err(*column, "expected a morphism, found a number"),
            Reference::Entry { name, param: None, column } => {
                if let Some(m) = self.file.and_then(|f| f.morphism(name)) {
                    return Ok(m.morphism.clone());
                }
                match name.as_str() {
                    "id" => Ok(CdgaMorphism::identity(Arc::new(Cdga::ground_field()))),
                    _ => err(*column, format!("unknown morphism `{name}`")),
                }
            }
            Reference::Entry { name, column, .. } => err(*column, format!("`{name}:…` is not a morphism")),
            Reference::Call { name, args, column } => {
                let one_arg = || {
                    if args.len() != 1 {
                        return err(*column, format!("`{name}` takes one algebra"));
                    }
                    self.algebra(&args[0])
                };
                match name.as_str() {
                    "id" => Ok(CdgaMorphism::identity(one_arg()?)),
                    "aug" => Ok(CdgaMorphism::augmentation(one_arg()?)),
                    "mult" | "mult-model" => {
                        let [a, Reference::Number { value, column: ncol }] = args.as_slice() else {
                            return err(*column, format!("`{name}` takes an algebra and a number"));
                        };
                        if *value < 1 {
                            return err(*ncol, "the tensor power must be at least 1");
                        }
                        catalog::mult_model(self.algebra(a)?, *value as usize)
                            .map_err(|e| ReferenceError { column: *ncol, message: e.to_string() })
                    }
                    _ => err(*column, format!("unknown morphism constructor `{name}`")),
                }
            }
        }
    }

    pub fn resolve_algebra(&self, text: &str) -> Result<Arc<Cdga>, ReferenceError> {
        self.algebra(&parse_reference(text)?)
    }

    pub fn resolve_morphism(&self, text: &str) -> Result<CdgaMorphism, ReferenceError> {
        self.morphism(&parse_reference(text)?)
    }
}
