//! Polynomial text syntax and problem files.
//!
//! A polynomial is a sum of terms joined by `+`/`-`; a term is a
//! `*`-separated product of rational numbers (`3`, `3/2`) and powers
//! (`x4^2`, exponent omitted means 1). Whitespace is ignored.

use std::collections::BTreeSet;
use std::fmt;
use std::iter::Peekable;
use std::str::CharIndices;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::order::{ExponentVector, OrderKind, Precedence, Var};
use crate::poly::{Coeff, MvPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// `x<id>` to its id.
pub fn indexed_var(ident: &str) -> Option<Var> {
    let digits = ident.strip_prefix('x')?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || (digits.len() > 1 && digits.starts_with('0')) {
        return None;
    }
    digits.parse().ok().map(Var)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// How identifiers in polynomial text map to variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarScope {
    /// Named mode: the name of `x_i` is `names[i]`. `None` means `x<id>` syntax.
    names: Option<Vec<String>>,
    /// Indexed mode with a declared precedence list.
    declared: Option<BTreeSet<Var>>,
    strict: bool,
}

impl VarScope {
    /// Plain `x<id>` variables, all auto-registered.
    pub fn indexed() -> Self {
        Self::default()
    }

    /// Builds a scope and precedence from a `--vars` list.
    ///
    /// A list of `x<id>` entries is a precedence permutation of those ids.
    /// Any other list names variables `x0, x1, ...` in list order, so the
    /// first name has the highest precedence.
    pub fn from_list(list: &[String], strict: bool) -> Result<(Self, Precedence), String> {
        let indexed: Vec<Option<Var>> = list.iter().map(|s| indexed_var(s)).collect();
        if !list.is_empty() && indexed.iter().all(Option::is_some) {
            let vars: Vec<Var> = indexed.into_iter().flatten().collect();
            let prec = Precedence::explicit(vars.clone()).map_err(|e| e.to_string())?;
            let scope = Self { names: None, declared: Some(vars.into_iter().collect()), strict };
            return Ok((scope, prec));
        }
        if let Some(bad) = list.iter().find(|s| indexed_var(s).is_some()) {
            return Err(format!("variable list mixes `x<id>` entries such as `{bad}` with names"));
        }
        if let Some(bad) = list.iter().find(|s| !is_identifier(s)) {
            return Err(format!("`{bad}` is not a variable name"));
        }
        let mut seen = BTreeSet::new();
        if let Some(dup) = list.iter().find(|s| !seen.insert(s.as_str())) {
            return Err(format!("variable `{dup}` listed twice"));
        }
        Ok((Self { names: Some(list.to_vec()), declared: None, strict }, Precedence::Natural))
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Variable names for display in named mode.
    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    fn resolve(&mut self, ident: &str) -> Result<Var, String> {
        match &mut self.names {
            Some(names) => {
                if let Some(k) = names.iter().position(|n| n == ident) {
                    return Ok(Var(k as u32));
                }
                if self.strict {
                    return Err(format!("unknown variable `{ident}`"));
                }
                names.push(ident.to_string());
                Ok(Var(names.len() as u32 - 1))
            }
            None => {
                let v = indexed_var(ident)
                    .ok_or_else(|| format!("`{ident}` is not a variable; expected x<id>"))?;
                match &self.declared {
                    Some(set) if self.strict && !set.contains(&v) => Err(format!("unknown variable `{ident}`")),
                    _ => Ok(v),
                }
            }
        }
    }
}

/// Parses a polynomial over `x<id>` variables.
pub fn parse_poly(text: &str) -> Result<MvPoly, ParseError> {
    parse_poly_in(text, &mut VarScope::indexed())
}

pub fn parse_poly_in(text: &str, scope: &mut VarScope) -> Result<MvPoly, ParseError> {
    parse_at(text, scope, 1, 1)
}

fn parse_at(text: &str, scope: &mut VarScope, line: usize, column: usize) -> Result<MvPoly, ParseError> {
    let mut p = Parser { text, chars: text.char_indices().peekable(), scope, line, column, at: (line, column) };
    p.poly()
}

struct Parser<'a, 's> {
    text: &'a str,
    chars: Peekable<CharIndices<'a>>,
    scope: &'s mut VarScope,
    line: usize,
    column: usize,
    /// Position of the last token start.
    at: (usize, usize),
}

impl Parser<'_, '_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.at.0, column: self.at.1, message: message.into() }
    }

    fn bump(&mut self) -> Option<char> {
        let (_, c) = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and returns the next character without consuming it.
    fn peek(&mut self) -> Option<char> {
        while let Some(&(_, c)) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
        self.at = (self.line, self.column);
        self.chars.peek().map(|&(_, c)| c)
    }

    fn offset(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |&(i, _)| i)
    }

    fn take_while(&mut self, pred: impl Fn(char) -> bool) -> &str {
        let start = self.offset();
        while matches!(self.chars.peek(), Some(&(_, c)) if pred(c)) {
            self.bump();
        }
        let end = self.offset();
        &self.text[start..end]
    }

    fn poly(&mut self) -> Result<MvPoly, ParseError> {
        let mut out = MvPoly::zero();
        let mut sign = match self.peek() {
            Some('-') => {
                self.bump();
                -Coeff::one()
            }
            Some('+') => {
                self.bump();
                Coeff::one()
            }
            None => return Err(self.error("empty polynomial")),
            _ => Coeff::one(),
        };
        loop {
            let (e, c) = self.term()?;
            out.add_term(e, sign * c);
            sign = match self.peek() {
                None => return Ok(out),
                Some('+') => Coeff::one(),
                Some('-') => -Coeff::one(),
                Some(c) => return Err(self.error(format!("expected `+`, `-` or end of input, found `{c}`"))),
            };
            self.bump();
        }
    }

    fn term(&mut self) -> Result<(ExponentVector, Coeff), ParseError> {
        let mut c = Coeff::one();
        let mut e = ExponentVector::zero();
        loop {
            match self.peek() {
                Some(ch) if ch.is_ascii_digit() => c *= self.rational()?,
                Some(ch) if ch.is_ascii_alphabetic() || ch == '_' => {
                    let f = self.power()?;
                    e = e.checked_add(&f).map_err(|err| self.error(err.to_string()))?;
                }
                Some(ch) => return Err(self.error(format!("expected a number or variable, found `{ch}`"))),
                None => return Err(self.error("expected a number or variable, found end of input")),
            }
            if self.peek() != Some('*') {
                return Ok((e, c));
            }
            self.bump();
        }
    }

    fn natural(&mut self) -> Result<BigInt, ParseError> {
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.error("expected digits"));
        }
        Ok(digits.parse().expect("ascii digits"))
    }

    fn rational(&mut self) -> Result<Coeff, ParseError> {
        let num = self.natural()?;
        let start = self.at;
        if self.chars.peek().map(|&(_, c)| c) != Some('/') {
            return Ok(Coeff::from_integer(num));
        }
        self.bump();
        let den = self.natural().map_err(|_| ParseError {
            line: start.0,
            column: start.1,
            message: "malformed rational: missing denominator".into(),
        })?;
        if den.is_zero() {
            return Err(ParseError { line: start.0, column: start.1, message: "malformed rational: zero denominator".into() });
        }
        Ok(Coeff::new(num, den))
    }

    fn power(&mut self) -> Result<ExponentVector, ParseError> {
        let start = self.at;
        let ident = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_').to_string();
        let v = self
            .scope
            .resolve(&ident)
            .map_err(|message| ParseError { line: start.0, column: start.1, message })?;
        let mut k = 1u64;
        if self.peek() == Some('^') {
            self.bump();
            self.peek();
            let digits = self.take_while(|c| c.is_ascii_digit());
            if digits.is_empty() {
                return Err(self.error("expected an exponent after `^`"));
            }
            k = digits.parse().map_err(|_| self.error("exponent out of range"))?;
        }
        ExponentVector::new([(v, k)]).map_err(|err| self.error(err.to_string()))
    }
}

/// A named or anonymous polynomial from a problem file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: Option<String>,
    pub poly: MvPoly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    None,
    Generators,
    Query,
}

/// Header overrides supplied on the command line.
#[derive(Clone, Debug, Default)]
pub struct HeaderOverrides {
    pub order: Option<OrderKind>,
    pub vars: Option<Vec<String>>,
    pub strict: bool,
}

/// A parsed problem file.
///
/// ```text
/// # Cyclic-3
/// order lex
/// vars x0, x1, x2
/// generators:
///   f1 = x0 + x1 + x2
///   f2 = x0*x1 + x1*x2 + x2*x0
///   f3 = x0*x1*x2 - 1
/// query:
///   x1
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub order: OrderKind,
    pub precedence: Precedence,
    pub scope: VarScope,
    pub generators: Vec<Entry>,
    pub query: Vec<Entry>,
}

fn split_list(s: &str) -> Vec<String> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::to_string)
        .collect()
}

impl ProblemFile {
    pub fn parse(text: &str, overrides: &HeaderOverrides) -> Result<Self, ParseError> {
        let err = |line: usize, column: usize, message: String| ParseError { line, column, message };
        let mut order = None;
        let mut vars: Option<(usize, Vec<String>)> = None;
        let mut strict = overrides.strict;
        let mut body = Vec::new();
        let mut section = Section::None;

        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("");
            let trimmed = content.trim();
            if trimmed.is_empty() {
                continue;
            }
            let column = content.len() - content.trim_start().len() + 1;
            match trimmed {
                "generators:" => {
                    section = Section::Generators;
                    continue;
                }
                "query:" => {
                    section = Section::Query;
                    continue;
                }
                _ => {}
            }
            if section == Section::None {
                let (key, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
                match key {
                    "order" => {
                        order = Some(rest.trim().parse::<OrderKind>().map_err(|m| err(line, column, m))?);
                    }
                    "vars" => vars = Some((line, split_list(rest))),
                    "strict" if rest.trim().is_empty() => strict = true,
                    _ => {
                        return Err(err(
                            line,
                            column,
                            format!("unexpected `{key}` before a `generators:` or `query:` section"),
                        ))
                    }
                }
                continue;
            }
            body.push((line, column, section, trimmed.to_string()));
        }

        let order = overrides.order.or(order).unwrap_or(OrderKind::Lex);
        let (scope, precedence) = match (&overrides.vars, vars) {
            (Some(list), _) => VarScope::from_list(list, strict).map_err(|m| err(0, 0, m))?,
            (None, Some((line, list))) => VarScope::from_list(&list, strict).map_err(|m| err(line, 1, m))?,
            (None, None) => (VarScope { strict, ..VarScope::indexed() }, Precedence::Natural),
        };
        let mut file = ProblemFile { order, precedence, scope, generators: Vec::new(), query: Vec::new() };

        for (line, column, section, text) in body {
            let (name, poly_text, offset) = match text.split_once('=') {
                Some((lhs, rhs)) => {
                    let name = lhs.trim();
                    if !is_identifier(name) {
                        return Err(err(line, column, format!("`{name}` is not a valid name")));
                    }
                    let offset = lhs.len() + 1;
                    (Some(name.to_string()), rhs.to_string(), offset)
                }
                None => (None, text.clone(), 0),
            };
            let poly = parse_at(&poly_text, &mut file.scope, line, column + offset)?;
            let entry = Entry { name, poly };
            match section {
                Section::Generators => file.generators.push(entry),
                Section::Query => file.query.push(entry),
                Section::None => unreachable!(),
            }
        }
        Ok(file)
    }

    pub fn generator_polys(&self) -> Vec<MvPoly> {
        self.generators.iter().map(|e| e.poly.clone()).collect()
    }

    pub fn query_polys(&self) -> Vec<MvPoly> {
        self.query.iter().map(|e| e.poly.clone()).collect()
    }
}
