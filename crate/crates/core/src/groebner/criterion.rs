use super::{to_dense, to_sparse, Cofactors};
use crate::division::{divide, find_witness_violation, WitnessViolation};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{s_polynomial, MvPoly};

/// Witness that `s_polynomial(g_i, g_j)` has remainder zero over the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SPairCertificate {
    pub i: usize,
    pub j: usize,
    pub quotients: Cofactors,
}

impl SPairCertificate {
    /// Checks the certificate against `basis`. Out-of-range positions are an
    /// `IndexMismatch` error rather than a verdict.
    pub fn violation(&self, order: &MonomialOrder, basis: &[MvPoly]) -> Result<Option<WitnessViolation>> {
        let n = basis.len();
        if self.i >= n || self.j >= n {
            return Err(Error::IndexMismatch { expected: n, found: self.i.max(self.j) + 1 });
        }
        let dense = to_dense(&self.quotients, n).ok_or_else(|| Error::IndexMismatch {
            expected: n,
            found: self.quotients.keys().last().map_or(0, |k| k + 1),
        })?;
        let s = s_polynomial(order, &basis[self.i], &basis[self.j])?;
        find_witness_violation(order, &s, basis, &dense, &MvPoly::zero())
    }
}

/// The first pair whose S-polynomial leaves a nonzero remainder.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FailedPair {
    pub i: usize,
    pub j: usize,
    pub remainder: MvPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub holds: bool,
    /// One certificate per pair `i < j` when the criterion holds; the
    /// certificates found before the failing pair otherwise.
    pub certificates: Vec<SPairCertificate>,
    pub failure: Option<FailedPair>,
}

/// Divides every pairwise S-polynomial by `basis`, in `(i, j)` order, and
/// stops at the first nonzero remainder.
pub fn check_buchberger_criterion(order: &MonomialOrder, basis: &[MvPoly]) -> Result<CriterionReport> {
    let mut certificates = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(order, &basis[i], &basis[j])?;
            let res = divide(order, &s, basis)?;
            if !res.remainder.is_zero() {
                return Ok(CriterionReport {
                    holds: false,
                    certificates,
                    failure: Some(FailedPair { i, j, remainder: res.remainder }),
                });
            }
            certificates.push(SPairCertificate { i, j, quotients: to_sparse(&res.quotients) });
        }
    }
    certificates.sort_by_key(|c| (c.i, c.j));
    Ok(CriterionReport { holds: true, certificates, failure: None })
}
