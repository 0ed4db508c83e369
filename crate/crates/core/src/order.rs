//! Exponent vectors, monomial orders and degrees with a bottom element.
//!
//! Exponent vectors are finitely supported maps from variable indices to
//! naturals. Zero entries are never stored, so structural equality is the
//! mathematical one. Variable ids are unbounded in principle; no arity is
//! fixed anywhere in this module.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::embedding::VarInjection;
use crate::error::{Error, Result};

/// A variable index. By default a smaller id means higher precedence, so
/// `x0 > x1 > x2 > ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u32);

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}", self.0)
    }
}

/// The exponent of a monomial `x^a`, stored sparsely and sorted by variable id.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    entries: Vec<(Var, u64)>,
}

impl ExponentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `x_v^1`.
    pub fn var(v: Var) -> Self {
        Self { entries: vec![(v, 1)] }
    }

    /// Builds a vector from `(variable, exponent)` pairs. Repeated variables
    /// are summed and zero exponents dropped.
    pub fn new<I: IntoIterator<Item = (Var, u64)>>(pairs: I) -> Result<Self> {
        let mut entries: Vec<(Var, u64)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        entries.sort_unstable_by_key(|&(v, _)| v);
        let mut out: Vec<(Var, u64)> = Vec::with_capacity(entries.len());
        for (v, e) in entries {
            match out.last_mut() {
                Some((last, acc)) if *last == v => {
                    *acc = acc.checked_add(e).ok_or(Error::ExponentOverflow)?;
                }
                _ => out.push((v, e)),
            }
        }
        Ok(Self { entries: out })
    }

    /// Dense constructor: position `i` is the exponent of `x_i`.
    pub fn from_dense(exps: &[u64]) -> Self {
        let entries = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (Var(i as u32), e))
            .collect();
        Self { entries }
    }

    pub fn get(&self, v: Var) -> u64 {
        self.entries
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.entries[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u64)> + '_ {
        self.entries.iter().copied()
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_degree(&self) -> u128 {
        self.entries.iter().map(|&(_, e)| e as u128).sum()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.entries.last().map(|&(v, _)| v)
    }

    /// Componentwise sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for (v, a, b) in merge(&self.entries, &other.entries) {
            entries.push((v, a.checked_add(b).ok_or(Error::ExponentOverflow)?));
        }
        Ok(Self { entries })
    }

    /// Componentwise `max(0, a - b)`.
    pub fn trunc_sub(&self, other: &Self) -> Self {
        let entries = merge(&self.entries, &other.entries)
            .filter(|&(_, a, b)| a > b)
            .map(|(v, a, b)| (v, a - b))
            .collect();
        Self { entries }
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Self) -> Self {
        let entries = merge(&self.entries, &other.entries)
            .map(|(v, a, b)| (v, a.max(b)))
            .collect();
        Self { entries }
    }

    /// `x^self` divides `x^other`, i.e. `self(i) <= other(i)` for every `i`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.entries.len() > other.entries.len() {
            return false;
        }
        merge(&self.entries, &other.entries).all(|(_, a, b)| a <= b)
    }

    /// The two monomials share no variable.
    pub fn is_coprime(&self, other: &Self) -> bool {
        merge(&self.entries, &other.entries).all(|(_, a, b)| a == 0 || b == 0)
    }

    /// Pushes every variable through `f`. `f` must be injective on the
    /// support, otherwise colliding exponents are summed.
    pub fn map_vars<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(Var) -> Result<Var>,
    {
        let mut pairs = Vec::with_capacity(self.entries.len());
        for &(v, e) in &self.entries {
            pairs.push((f(v)?, e));
        }
        Self::new(pairs)
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Walks the union of two sorted supports, yielding `(var, a(var), b(var))`.
fn merge<'a>(a: &'a [(Var, u64)], b: &'a [(Var, u64)]) -> Merge<'a> {
    Merge { a, b, i: 0, j: 0 }
}

struct Merge<'a> {
    a: &'a [(Var, u64)],
    b: &'a [(Var, u64)],
    i: usize,
    j: usize,
}

impl Iterator for Merge<'_> {
    type Item = (Var, u64, u64);

    fn next(&mut self) -> Option<Self::Item> {
        match (self.a.get(self.i), self.b.get(self.j)) {
            (None, None) => None,
            (Some(&(v, x)), None) => {
                self.i += 1;
                Some((v, x, 0))
            }
            (None, Some(&(w, y))) => {
                self.j += 1;
                Some((w, 0, y))
            }
            (Some(&(v, x)), Some(&(w, y))) => match v.cmp(&w) {
                Ordering::Less => {
                    self.i += 1;
                    Some((v, x, 0))
                }
                Ordering::Greater => {
                    self.j += 1;
                    Some((w, 0, y))
                }
                Ordering::Equal => {
                    self.i += 1;
                    self.j += 1;
                    Some((v, x, y))
                }
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
    GrevLex,
}

impl OrderKind {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::GrLex => "grlex",
            OrderKind::GrevLex => "grevlex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "grlex" => Ok(OrderKind::GrLex),
            "grevlex" | "degrevlex" => Ok(OrderKind::GrevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}

/// Sort key of a variable under a precedence: smaller key, higher precedence.
pub type Rank = (u32, u64);

/// A strict total order on variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Precedence {
    /// Ascending id is descending precedence.
    Natural,
    /// The listed variables come first, in list order; unlisted variables
    /// follow by ascending id.
    Explicit(Arc<[Var]>),
    /// The precedence of `target` pulled back along an injection.
    Pullback {
        injection: VarInjection,
        target: Arc<Precedence>,
    },
}

impl Precedence {
    pub fn explicit(vars: Vec<Var>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for &v in &vars {
            if !seen.insert(v) {
                return Err(Error::DuplicateVar(v));
            }
        }
        Ok(Precedence::Explicit(vars.into()))
    }

    pub fn rank(&self, v: Var) -> Rank {
        match self {
            Precedence::Natural => (0, v.0 as u64),
            Precedence::Explicit(list) => match list.iter().position(|&w| w == v) {
                Some(pos) => (0, pos as u64),
                None => (1, v.0 as u64),
            },
            Precedence::Pullback { injection, target } => match injection.apply(v) {
                Ok(w) => target.rank(w),
                // only reachable for variables the induced order never sees
                Err(_) => (u32::MAX, v.0 as u64),
            },
        }
    }

    /// The listed variables in descending precedence, if this is an explicit list.
    pub fn as_list(&self) -> Option<&[Var]> {
        match self {
            Precedence::Explicit(list) => Some(list),
            _ => None,
        }
    }
}

/// A monomial order: one of the three built-in kinds over a variable precedence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Precedence,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Precedence) -> Self {
        Self { kind, precedence }
    }

    pub fn lex() -> Self {
        Self::new(OrderKind::Lex, Precedence::Natural)
    }

    pub fn grlex() -> Self {
        Self::new(OrderKind::GrLex, Precedence::Natural)
    }

    pub fn grevlex() -> Self {
        Self::new(OrderKind::GrevLex, Precedence::Natural)
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &Precedence {
        &self.precedence
    }

    pub fn compare(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self.kind {
            OrderKind::Lex => self.lex_cmp(a, b),
            OrderKind::GrLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| self.lex_cmp(a, b)),
            OrderKind::GrevLex => a
                .total_degree()
                .cmp(&b.total_degree())
                .then_with(|| self.revlex_cmp(a, b)),
        }
    }

    /// Decided at the highest-precedence variable where `a` and `b` differ.
    fn lex_cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let mut diffs = merge(&a.entries, &b.entries).filter(|&(_, x, y)| x != y);
        if let Precedence::Natural = self.precedence {
            return diffs.next().map_or(Ordering::Equal, |(_, x, y)| x.cmp(&y));
        }
        diffs
            .min_by_key(|&(v, _, _)| self.precedence.rank(v))
            .map_or(Ordering::Equal, |(_, x, y)| x.cmp(&y))
    }

    /// Decided at the lowest-precedence variable where `a` and `b` differ;
    /// the smaller exponent there wins.
    fn revlex_cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        let diffs = merge(&a.entries, &b.entries).filter(|&(_, x, y)| x != y);
        let last = if let Precedence::Natural = self.precedence {
            diffs.last()
        } else {
            diffs.max_by_key(|&(v, _, _)| self.precedence.rank(v))
        };
        last.map_or(Ordering::Equal, |(_, x, y)| y.cmp(&x))
    }

    pub fn compare_with_bot(&self, a: &DegreeOrBottom, b: &DegreeOrBottom) -> Ordering {
        match (a, b) {
            (DegreeOrBottom::Bottom, DegreeOrBottom::Bottom) => Ordering::Equal,
            (DegreeOrBottom::Bottom, _) => Ordering::Less,
            (_, DegreeOrBottom::Bottom) => Ordering::Greater,
            (DegreeOrBottom::Degree(x), DegreeOrBottom::Degree(y)) => self.compare(x, y),
        }
    }

    /// The larger of two exponents under this order.
    pub fn max<'a>(&self, a: &'a ExponentVector, b: &'a ExponentVector) -> &'a ExponentVector {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::lex()
    }
}

/// A degree extended with a bottom element, the degree of the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DegreeOrBottom {
    Bottom,
    Degree(ExponentVector),
}

impl DegreeOrBottom {
    pub fn is_bottom(&self) -> bool {
        matches!(self, DegreeOrBottom::Bottom)
    }

    /// Bottom absorbs: `⊥ + d = ⊥`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (DegreeOrBottom::Degree(a), DegreeOrBottom::Degree(b)) => {
                Ok(DegreeOrBottom::Degree(a.checked_add(b)?))
            }
            _ => Ok(DegreeOrBottom::Bottom),
        }
    }

    /// Collapses bottom to the zero vector.
    pub fn unbot_or_zero(self) -> ExponentVector {
        match self {
            DegreeOrBottom::Bottom => ExponentVector::zero(),
            DegreeOrBottom::Degree(d) => d,
        }
    }
}
