//! Multivariate division with remainder, and checkers for remainder witnesses.
//!
//! A witness for "`r` is a remainder of `f` on division by `B`" is a family of
//! cofactors `q_i`, one per divisor, such that
//!
//! 1. `f = Σ q_i·b_i + r`,
//! 2. `deg(b_i) + deg(q_i) ≤ deg(f)` with `⊥` absorbing,
//! 3. no exponent in the support of `r` is divisible by the leading exponent
//!    of any nonzero `b_i`.
//!
//! Divisor families are indexed, so duplicates count as distinct positions.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::{ExponentVector, MonomialOrder};
use crate::poly::{Coeff, MvPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    /// One cofactor per divisor position; zero where the divisor was never used.
    pub quotients: Vec<MvPoly>,
    pub remainder: MvPoly,
}

type Terms = Vec<(ExponentVector, Coeff)>;

/// Terms sorted ascending, so the leading term sits at the end.
fn ascending(order: &MonomialOrder, p: &MvPoly) -> Terms {
    let mut v: Terms = p.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    v.sort_by(|a, b| order.compare(&a.0, &b.0));
    v
}

struct Divisor {
    lead: ExponentVector,
    lead_coeff: Coeff,
    tail: Terms,
}

/// `work - factor * x^shift * tail`, all sequences ascending.
fn merge_sub(
    order: &MonomialOrder,
    work: Terms,
    tail: &Terms,
    shift: &ExponentVector,
    factor: &Coeff,
) -> Result<Terms> {
    let mut out = Vec::with_capacity(work.len() + tail.len());
    let mut w = work.into_iter().peekable();
    let mut t = tail.iter().peekable();
    loop {
        let next_t = match t.peek() {
            Some((e, c)) => Some((e.checked_add(shift)?, c)),
            None => None,
        };
        match (w.peek(), next_t) {
            (None, None) => break,
            (Some(_), None) => out.push(w.next().unwrap()),
            (None, Some((e, c))) => {
                out.push((e, -(factor * c)));
                t.next();
            }
            (Some((we, _)), Some((e, c))) => match order.compare(we, &e) {
                Ordering::Less => out.push(w.next().unwrap()),
                Ordering::Greater => {
                    out.push((e, -(factor * c)));
                    t.next();
                }
                Ordering::Equal => {
                    let (we, wc) = w.next().unwrap();
                    let sum = wc - factor * c;
                    if !sum.is_zero() {
                        out.push((we, sum));
                    }
                    t.next();
                }
            },
        }
    }
    Ok(out)
}

/// Divides `f` by the sequence `divisors`.
///
/// Each step looks at the leading term of the working polynomial and cancels
/// it against the first divisor (in sequence order) whose leading exponent
/// divides it; if none does, the term moves to the remainder. Zero divisors
/// are skipped.
pub fn divide(order: &MonomialOrder, f: &MvPoly, divisors: &[MvPoly]) -> Result<DivisionResult> {
    let divs: Vec<Option<Divisor>> = divisors
        .iter()
        .map(|b| {
            let mut terms = ascending(order, b);
            terms.pop().map(|(lead, lead_coeff)| Divisor { lead, lead_coeff, tail: terms })
        })
        .collect();
    let mut quotients = vec![MvPoly::zero(); divisors.len()];
    let mut remainder = MvPoly::zero();
    let mut work = ascending(order, f);

    while let Some((lead, c)) = work.pop() {
        let hit = divs
            .iter()
            .enumerate()
            .find_map(|(i, d)| d.as_ref().filter(|d| d.lead.divides(&lead)).map(|d| (i, d)));
        match hit {
            Some((i, d)) => {
                let shift = lead.trunc_sub(&d.lead);
                let factor = c / &d.lead_coeff;
                work = merge_sub(order, work, &d.tail, &shift, &factor)?;
                quotients[i].add_term(shift, factor);
            }
            None => remainder.add_term(lead, c),
        }
    }
    Ok(DivisionResult { quotients, remainder })
}

/// The first way a candidate witness breaks the remainder conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessViolation {
    /// `f ≠ Σ q_i b_i + r`.
    Identity,
    /// `deg(b_i) + deg(q_i) > deg(f)`.
    DegreeBound { position: usize },
    /// A term of `r` is divisible by the leading exponent of divisor `position`.
    Reducible { term: ExponentVector, position: usize },
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessViolation::Identity => f.write_str("cofactor identity does not hold"),
            WitnessViolation::DegreeBound { position } => {
                write!(f, "cofactor {position} exceeds the degree bound")
            }
            WitnessViolation::Reducible { term, position } => {
                write!(f, "remainder term {term} is divisible by the leading monomial of divisor {position}")
            }
        }
    }
}

/// Checks a witness and reports the first violated condition, if any.
pub fn find_witness_violation(
    order: &MonomialOrder,
    f: &MvPoly,
    basis: &[MvPoly],
    quotients: &[MvPoly],
    r: &MvPoly,
) -> Result<Option<WitnessViolation>> {
    if quotients.len() != basis.len() {
        return Err(Error::IndexMismatch { expected: basis.len(), found: quotients.len() });
    }
    let mut rhs = r.clone();
    for (q, b) in quotients.iter().zip(basis) {
        if !q.is_zero() {
            rhs += &q.checked_mul(b)?;
        }
    }
    if &rhs != f {
        return Ok(Some(WitnessViolation::Identity));
    }
    let df = f.with_bot_degree(order);
    for (position, (q, b)) in quotients.iter().zip(basis).enumerate() {
        let d = b.with_bot_degree(order).add(&q.with_bot_degree(order))?;
        if order.compare_with_bot(&d, &df) == Ordering::Greater {
            return Ok(Some(WitnessViolation::DegreeBound { position }));
        }
    }
    Ok(first_reducible_term(order, r, basis).map(|(term, position)| WitnessViolation::Reducible { term, position }))
}

/// True iff all three remainder conditions hold for the given witness.
pub fn check_remainder_witness(
    order: &MonomialOrder,
    f: &MvPoly,
    basis: &[MvPoly],
    quotients: &[MvPoly],
    r: &MvPoly,
) -> Result<bool> {
    Ok(find_witness_violation(order, f, basis, quotients, r)?.is_none())
}

/// A term of `r` divisible by the leading exponent of some nonzero divisor.
pub fn first_reducible_term(order: &MonomialOrder, r: &MvPoly, basis: &[MvPoly]) -> Option<(ExponentVector, usize)> {
    let leads: Vec<(usize, ExponentVector)> = basis
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .map(|(i, b)| (i, b.degree(order)))
        .collect();
    for (term, _) in r.sorted_terms(order) {
        if let Some((i, _)) = leads.iter().find(|(_, l)| l.divides(term)) {
            return Some((term.clone(), *i));
        }
    }
    None
}

/// No term of `r` is divisible by the leading monomial of a nonzero divisor.
pub fn is_fully_reduced(order: &MonomialOrder, r: &MvPoly, basis: &[MvPoly]) -> bool {
    first_reducible_term(order, r, basis).is_none()
}
