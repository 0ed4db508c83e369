//! Sparse multivariate polynomials over exact rationals.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{DegreeOrBottom, ExponentVector, MonomialOrder, Var};

/// Exact rational coefficient, always kept in lowest terms with a positive
/// denominator.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial as a map from exponent vectors to nonzero coefficients.
///
/// Storage is keyed by the structural order of exponent vectors; anything
/// that depends on a monomial order takes the order as an argument.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MvPoly {
    terms: BTreeMap<ExponentVector, Coeff>,
}

impl MvPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(ExponentVector::zero(), c)
    }

    pub fn monomial(e: ExponentVector, c: Coeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(ExponentVector::var(v), Coeff::one())
    }

    /// Collects terms, summing coefficients of equal monomials.
    pub fn from_terms<I: IntoIterator<Item = (ExponentVector, Coeff)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Shorthand for fixtures: dense exponent rows with integer coefficients.
    pub fn from_ints(terms: &[(&[u64], i64)]) -> Self {
        Self::from_terms(terms.iter().map(|(e, c)| (ExponentVector::from_dense(e), coeff(*c))))
    }

    pub fn add_term(&mut self, e: ExponentVector, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Option<&Coeff> {
        self.terms.get(e)
    }

    /// Terms in structural (storage) order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Coeff)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (ExponentVector, Coeff)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&ExponentVector, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.compare(b.0, a.0));
        v
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|e| e.support()).collect()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect();
        Self { terms }
    }

    /// `c * x^e * self`.
    pub fn mul_term(&self, e: &ExponentVector, c: &Coeff) -> Result<Self> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        let mut terms = BTreeMap::new();
        for (f, a) in &self.terms {
            terms.insert(f.checked_add(e)?, a * c);
        }
        Ok(Self { terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (e, c) in &other.terms {
            for (f, a) in &self.terms {
                out.add_term(f.checked_add(e)?, a * c);
            }
        }
        Ok(out)
    }

    fn leading(&self, order: &MonomialOrder) -> Option<(&ExponentVector, &Coeff)> {
        self.terms
            .iter()
            .max_by(|a, b| order.compare(a.0, b.0))
    }

    /// `⊥` for the zero polynomial, otherwise the maximal exponent.
    pub fn with_bot_degree(&self, order: &MonomialOrder) -> DegreeOrBottom {
        match self.leading(order) {
            None => DegreeOrBottom::Bottom,
            Some((e, _)) => DegreeOrBottom::Degree(e.clone()),
        }
    }

    /// Maximal exponent; the zero vector for the zero polynomial.
    pub fn degree(&self, order: &MonomialOrder) -> ExponentVector {
        self.with_bot_degree(order).unbot_or_zero()
    }

    pub fn leading_coeff(&self, order: &MonomialOrder) -> Coeff {
        self.leading(order).map_or_else(Coeff::zero, |(_, c)| c.clone())
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => Self::zero(),
            Some((e, c)) => Self::monomial(e.clone(), c.clone()),
        }
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => Self::zero(),
            Some((e, _)) => Self::monomial(e.clone(), Coeff::one()),
        }
    }

    pub fn is_monic(&self, order: &MonomialOrder) -> bool {
        self.leading_coeff(order).is_one()
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> Result<Self> {
        let lc = self.leading_coeff(order);
        if lc.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.scale(&lc.recip()))
    }

    /// Applies `f` to every exponent vector. `f` must be injective on the
    /// support for the result to be a plain relabeling.
    pub fn map_exponents<F>(&self, mut f: F) -> Result<Self>
    where
        F: FnMut(&ExponentVector) -> Result<ExponentVector>,
    {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(f(e)?, c.clone());
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, order: &'a MonomialOrder) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order, names: None }
    }

    /// Like [`MvPoly::display`], printing `x_i` as `names[i]` when present.
    pub fn display_named<'a>(&'a self, order: &'a MonomialOrder, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, order, names: Some(names) }
    }
}

/// The S-polynomial in its coefficient-cleared form
/// `x^(deg g - deg f) * LC(g) * f - x^(deg f - deg g) * LC(f) * g`,
/// with truncated exponent subtraction. Total: zero inputs give zero.
pub fn s_polynomial(order: &MonomialOrder, f: &MvPoly, g: &MvPoly) -> Result<MvPoly> {
    let df = f.degree(order);
    let dg = g.degree(order);
    let left = f.mul_term(&dg.trunc_sub(&df), &g.leading_coeff(order))?;
    let right = g.mul_term(&df.trunc_sub(&dg), &f.leading_coeff(order))?;
    Ok(&left - &right)
}

impl Add<&MvPoly> for &MvPoly {
    type Output = MvPoly;

    fn add(self, rhs: &MvPoly) -> MvPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&MvPoly> for &MvPoly {
    type Output = MvPoly;

    fn sub(self, rhs: &MvPoly) -> MvPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl AddAssign<&MvPoly> for MvPoly {
    fn add_assign(&mut self, rhs: &MvPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&MvPoly> for MvPoly {
    fn sub_assign(&mut self, rhs: &MvPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c);
        }
    }
}

impl Neg for &MvPoly {
    type Output = MvPoly;

    fn neg(self) -> MvPoly {
        self.scale(&-Coeff::one())
    }
}

/// Panics on exponent overflow; use [`MvPoly::checked_mul`] to get the error.
impl Mul<&MvPoly> for &MvPoly {
    type Output = MvPoly;

    fn mul(self, rhs: &MvPoly) -> MvPoly {
        self.checked_mul(rhs).expect("exponent overflow in polynomial product")
    }
}

/// Prints terms descending under the active order, e.g. `x0*x1^2 - 3/2*x2 + 1`.
pub struct PolyDisplay<'a> {
    poly: &'a MvPoly,
    order: &'a MonomialOrder,
    names: Option<&'a [String]>,
}

impl PolyDisplay<'_> {
    fn var_name(&self, v: Var) -> String {
        match self.names.and_then(|n| n.get(v.0 as usize)) {
            Some(name) => name.clone(),
            None => v.to_string(),
        }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms(self.order);
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            let mono: Vec<String> = e
                .iter()
                .map(|(v, p)| {
                    if p == 1 {
                        self.var_name(v)
                    } else {
                        format!("{}^{p}", self.var_name(v))
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Compares two polynomials' leading exponents; zero sorts lowest.
pub fn cmp_leading(order: &MonomialOrder, a: &MvPoly, b: &MvPoly) -> Ordering {
    order.compare_with_bot(&a.with_bot_degree(order), &b.with_bot_degree(order))
}
