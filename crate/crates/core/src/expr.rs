//! Text form of knot expressions.
//!
//! ```text
//! expr  := "0" | [sign] term (op term)*
//! op    := "+" | "-" | "#" [sign]
//! term  := [integer "*"] atom
//! atom  := "T(" p "," q ")" | "K[" n "]" | "M(" path ")" | "D(" name ")"
//! ```
//!
//! `#` is connected sum and a leading `-` is the mirror image. Whitespace is
//! ignored between tokens.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::concordance::{ConcordanceError, KnotAtom, KnotExpr};
use crate::seifert::SeifertMatrix;

/// Supplies Seifert matrices for `M(path)` atoms.
pub trait MatrixResolver {
    fn resolve(&self, path: &str) -> Result<SeifertMatrix, String>;
}

/// Rejects every matrix atom.
pub struct NoMatrices;

impl MatrixResolver for NoMatrices {
    fn resolve(&self, path: &str) -> Result<SeifertMatrix, String> {
        Err(format!("matrix atoms are not available here (M({path}))"))
    }
}

impl MatrixResolver for HashMap<String, SeifertMatrix> {
    fn resolve(&self, path: &str) -> Result<SeifertMatrix, String> {
        self.get(path).cloned().ok_or_else(|| format!("no matrix named {path:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ExprError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Set when the text parsed but an atom was invalid.
    pub cause: Option<ConcordanceError>,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    resolver: &'a dyn MatrixResolver,
}

impl<'a> Parser<'a> {
    fn error_at(&self, pos: usize, message: impl Into<String>) -> ExprError {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        ExprError { line, column, message: message.into(), cause: None }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, want: char) -> Result<(), ExprError> {
        let at = {
            self.skip_ws();
            self.pos
        };
        match self.bump() {
            Some(c) if c == want => Ok(()),
            Some(c) => Err(self.error_at(at, format!("expected '{want}', found '{c}'"))),
            None => Err(self.error_at(at, format!("expected '{want}', found end of input"))),
        }
    }

    fn integer(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let neg = rest.starts_with('-');
        let body = if neg { &rest[1..] } else { rest };
        let len = body.len() - body.trim_start_matches(|c: char| c.is_ascii_digit()).len();
        if len == 0 {
            return Err(self.error_at(start, "expected an integer"));
        }
        let text = &rest[..len + usize::from(neg)];
        self.pos += text.len();
        text.parse().map_err(|_| self.error_at(start, format!("integer {text} is out of range")))
    }

    /// Raw text up to the next `)`.
    fn until_close(&mut self) -> Result<&'a str, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(')')
            .ok_or_else(|| self.error_at(self.src.len(), "expected ')', found end of input"))?;
        self.pos += len;
        Ok(self.src[start..start + len].trim())
    }

    fn atom(&mut self) -> Result<KnotAtom, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let wrap = |p: &Self, e: ConcordanceError| ExprError { cause: Some(e.clone()), ..p.error_at(start, e.to_string()) };
        match self.bump() {
            Some('T') => {
                self.expect('(')?;
                let p = self.integer()?;
                self.expect(',')?;
                let q = self.integer()?;
                self.expect(')')?;
                KnotAtom::torus(p, q).map_err(|e| wrap(self, e))
            }
            Some('K') => {
                self.expect('[')?;
                let n = self.integer()?;
                self.expect(']')?;
                KnotAtom::delta(n).map_err(|e| wrap(self, e))
            }
            Some('M') => {
                self.expect('(')?;
                let path = self.until_close()?;
                self.expect(')')?;
                if path.is_empty() {
                    return Err(self.error_at(start, "empty matrix path"));
                }
                let matrix = self.resolver.resolve(path).map_err(|m| self.error_at(start, m))?;
                Ok(KnotAtom::Matrix { name: path.to_string(), matrix })
            }
            Some('D') => {
                self.expect('(')?;
                let name = self.until_close()?;
                self.expect(')')?;
                KnotAtom::declared(name).map_err(|e| wrap(self, e))
            }
            Some(c) => Err(self.error_at(start, format!("expected an atom T(p,q), K[n], M(path) or D(name), found '{c}'"))),
            None => Err(self.error_at(start, "expected an atom, found end of input")),
        }
    }

    fn term(&mut self) -> Result<(i64, KnotAtom), ExprError> {
        let coefficient = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let k = self.integer()?;
                self.expect('*')?;
                k
            }
            _ => 1,
        };
        Ok((coefficient, self.atom()?))
    }

    fn unary_sign(&mut self) -> i64 {
        match self.peek() {
            Some('-' | '−') => {
                self.bump();
                -1
            }
            Some('+') => {
                self.bump();
                1
            }
            _ => 1,
        }
    }

    fn expr(&mut self) -> Result<KnotExpr, ExprError> {
        let rest = self.src.trim();
        if rest.is_empty() || rest == "0" {
            return Ok(KnotExpr::unknot());
        }
        let mut terms = Vec::new();
        let mut sign = self.unary_sign();
        loop {
            let (c, a) = self.term()?;
            let c = c.checked_mul(sign).ok_or_else(|| self.error_at(self.pos, "coefficient overflow"))?;
            terms.push((c, a));
            self.skip_ws();
            let at = self.pos;
            sign = match self.bump() {
                None => break,
                Some('+') => 1,
                Some('-' | '−') => -1,
                Some('#') => self.unary_sign(),
                Some(c) => return Err(self.error_at(at, format!("expected '+', '-' or '#', found '{c}'"))),
            };
        }
        Ok(KnotExpr::from_terms(terms))
    }
}

pub fn parse_expr(src: &str, resolver: &dyn MatrixResolver) -> Result<KnotExpr, ExprError> {
    Parser { src, pos: 0, resolver }.expr()
}

/// Parses each item as a separate expression.
pub fn parse_exprs<S: AsRef<str>>(items: &[S], resolver: &dyn MatrixResolver) -> Result<Vec<KnotExpr>, ExprError> {
    items.iter().map(|s| parse_expr(s.as_ref(), resolver)).collect()
}

impl std::str::FromStr for KnotExpr {
    type Err = ExprError;

    /// Parses without matrix atoms.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s, &NoMatrices)
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unknot() {
            return f.write_str("0");
        }
        for (i, (c, a)) in self.terms().iter().enumerate() {
            let sign = match (i, *c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            f.write_str(sign)?;
            match c.unsigned_abs() {
                1 => write!(f, "{a}")?,
                k => write!(f, "{k}*{a}")?,
            }
        }
        Ok(())
    }
}
