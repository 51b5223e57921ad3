use super::{Diagnostic, DiagnosticKind, Location};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    /// Unsigned decimal digits.
    Nat(String),
    LBrace,
    RBrace,
    Colon,
    Semi,
    Eq,
    Arrow,
    MapsTo,
    Caret,
    Star,
    Plus,
    Minus,
    Slash,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Nat(s) => format!("number `{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::MapsTo => "`|->`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Token {
    pub tok: Tok,
    pub at: Location,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, Diagnostic> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    while let Some(&c) = chars.peek() {
        let at = Location { line, column };
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars<'_>>| {
            let c = chars.next().expect("peeked");
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_') {
                s.push(bump(&mut chars));
            }
            Tok::Ident(s)
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                s.push(bump(&mut chars));
            }
            Tok::Nat(s)
        } else {
            bump(&mut chars);
            match c {
                '{' => Tok::LBrace,
                '}' => Tok::RBrace,
                ':' => Tok::Colon,
                ';' => Tok::Semi,
                '=' => Tok::Eq,
                '^' => Tok::Caret,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '/' => Tok::Slash,
                '-' if chars.peek() == Some(&'>') => {
                    bump(&mut chars);
                    Tok::Arrow
                }
                '-' => Tok::Minus,
                '|' if chars.peek() == Some(&'-') => {
                    bump(&mut chars);
                    if chars.peek() != Some(&'>') {
                        return Err(Diagnostic::new(DiagnosticKind::Syntax, at, "expected `|->`"));
                    }
                    bump(&mut chars);
                    Tok::MapsTo
                }
                other => {
                    return Err(Diagnostic::new(DiagnosticKind::Syntax, at, format!("unexpected character `{other}`")))
                }
            }
        };
        out.push(Token { tok, at });
    }
    out.push(Token { tok: Tok::Eof, at: Location { line, column } });
    Ok(out)
}
