//! Groebner bases: Buchberger's algorithm and criterion, minimal and reduced
//! bases, ideal membership, the leading-term cancellation decomposition and
//! externally checkable certificates.

mod buchberger;
mod cancellation;
mod certificate;
mod criterion;
mod membership;
mod reduce;

use std::collections::{BTreeMap, BTreeSet};

pub use buchberger::buchberger;
pub use cancellation::{cancellation_decompose, recombine_s_polynomials};
pub use certificate::{verify_certificates, CertificateBundle, CertificateError};
pub use criterion::{check_buchberger_criterion, CriterionReport, FailedPair, SPairCertificate};
pub use membership::{member_of_ideal, MembershipCertificate};
pub use reduce::{inter_reduce, is_minimal, is_reduced, is_reduced_formal, minimalize, reduced_groebner};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::MvPoly;

/// Sparse cofactor family: position to polynomial, absent meaning zero.
pub type Cofactors = BTreeMap<usize, MvPoly>;

pub(crate) fn to_sparse(dense: &[MvPoly]) -> Cofactors {
    dense
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(i, q)| (i, q.clone()))
        .collect()
}

/// Expands a sparse family to `len` positions; `None` if a position is out of range.
pub(crate) fn to_dense(sparse: &Cofactors, len: usize) -> Option<Vec<MvPoly>> {
    let mut out = vec![MvPoly::zero(); len];
    for (&i, q) in sparse {
        *out.get_mut(i)? = q.clone();
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Supplied from outside; nothing has been checked.
    Claimed,
    /// The criterion holds and every element has a cofactor expression over
    /// the originating generators.
    Verified,
}

/// Which pending S-pair Buchberger's algorithm reduces next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Least lcm of leading exponents first, ties by least `(i, j)`.
    #[default]
    Normal,
    /// Pairs in creation order.
    Fifo,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    pub strategy: Strategy,
    /// Skip pairs whose leading monomials are coprime.
    pub coprime_skip: bool,
    /// Maximum number of S-pair reductions before giving up.
    pub budget: usize,
}

pub const DEFAULT_BUDGET: usize = 100_000;

impl Default for BuchbergerConfig {
    fn default() -> Self {
        Self { strategy: Strategy::Normal, coprime_skip: false, budget: DEFAULT_BUDGET }
    }
}

/// A basis together with the generators it came from.
///
/// `cofactors[i][j]` is the coefficient of `generators[j]` in the expression
/// of `elements[i]`, so that `elements[i] = Σ_j cofactors[i][j]·generators[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    elements: Vec<MvPoly>,
    provenance: Provenance,
    generators: Vec<MvPoly>,
    cofactors: Vec<Vec<MvPoly>>,
}

impl GroebnerBasis {
    /// An unverified basis. Zero elements are dropped; the generators are
    /// the elements themselves.
    pub fn claimed(order: MonomialOrder, elements: Vec<MvPoly>) -> Self {
        let elements: Vec<MvPoly> = elements.into_iter().filter(|p| !p.is_zero()).collect();
        let n = elements.len();
        let cofactors = (0..n)
            .map(|i| (0..n).map(|j| if i == j { MvPoly::one() } else { MvPoly::zero() }).collect())
            .collect();
        Self { order, generators: elements.clone(), elements, provenance: Provenance::Claimed, cofactors }
    }

    pub(crate) fn from_parts(
        order: MonomialOrder,
        elements: Vec<MvPoly>,
        generators: Vec<MvPoly>,
        cofactors: Vec<Vec<MvPoly>>,
    ) -> Self {
        debug_assert_eq!(elements.len(), cofactors.len());
        Self { order, elements, provenance: Provenance::Verified, generators, cofactors }
    }

    /// Runs the Buchberger criterion; on success the basis becomes verified.
    pub fn verify(mut self) -> Result<Result<Self, FailedPair>> {
        let report = check_buchberger_criterion(&self.order, &self.elements)?;
        match report.failure {
            Some(fail) => Ok(Err(fail)),
            None => {
                self.provenance = Provenance::Verified;
                Ok(Ok(self))
            }
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[MvPoly] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<MvPoly> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_verified(&self) -> bool {
        self.provenance == Provenance::Verified
    }

    pub fn generators(&self) -> &[MvPoly] {
        &self.generators
    }

    pub fn cofactors(&self) -> &[Vec<MvPoly>] {
        &self.cofactors
    }

    pub fn element_set(&self) -> BTreeSet<MvPoly> {
        self.elements.iter().cloned().collect()
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.is_verified() {
            Ok(())
        } else {
            Err(Error::NotVerified)
        }
    }

    /// Turns cofactors over the basis into cofactors over the generators:
    /// `a_j = Σ_i q_i·cofactors[i][j]`.
    pub fn express_over_generators(&self, quotients: &[MvPoly]) -> Result<Vec<MvPoly>> {
        if quotients.len() != self.elements.len() {
            return Err(Error::IndexMismatch { expected: self.elements.len(), found: quotients.len() });
        }
        let mut out = vec![MvPoly::zero(); self.generators.len()];
        for (q, row) in quotients.iter().zip(&self.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in out.iter_mut().zip(row) {
                if !c.is_zero() {
                    *acc += &q.checked_mul(c)?;
                }
            }
        }
        Ok(out)
    }

    /// Checks `elements[i] = Σ_j cofactors[i][j]·generators[j]` for every `i`.
    pub fn cofactors_hold(&self) -> Result<bool> {
        for (e, row) in self.elements.iter().zip(&self.cofactors) {
            if &combine(row, &self.generators)? != e {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `Σ_i coeffs[i]·polys[i]`.
pub fn combine(coeffs: &[MvPoly], polys: &[MvPoly]) -> Result<MvPoly> {
    if coeffs.len() != polys.len() {
        return Err(Error::IndexMismatch { expected: polys.len(), found: coeffs.len() });
    }
    let mut acc = MvPoly::zero();
    for (c, p) in coeffs.iter().zip(polys) {
        if !c.is_zero() {
            acc += &c.checked_mul(p)?;
        }
    }
    Ok(acc)
}
