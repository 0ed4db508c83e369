use super::{to_dense, to_sparse, Cofactors, GroebnerBasis};
use crate::division::{divide, find_witness_violation};
use crate::error::{Error, Result};
use crate::poly::MvPoly;

/// Division witness for `p` over a basis: `p = Σ q_i g_i + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub quotients: Cofactors,
    pub remainder: MvPoly,
}

impl MembershipCertificate {
    /// Re-checks the witness against `gb` without trusting its producer.
    pub fn check(&self, gb: &GroebnerBasis, p: &MvPoly) -> Result<bool> {
        let dense = self.dense(gb.len())?;
        Ok(find_witness_violation(gb.order(), p, gb.elements(), &dense, &self.remainder)?.is_none())
    }

    pub fn dense(&self, len: usize) -> Result<Vec<MvPoly>> {
        to_dense(&self.quotients, len).ok_or(Error::IndexMismatch { expected: len, found: self.quotients.len() })
    }
}

/// Ideal membership over a verified basis: `p` is a member iff its remainder
/// is zero.
pub fn member_of_ideal(gb: &GroebnerBasis, p: &MvPoly) -> Result<(bool, MembershipCertificate)> {
    gb.require_verified()?;
    let res = divide(gb.order(), p, gb.elements())?;
    let member = res.remainder.is_zero();
    Ok((member, MembershipCertificate { quotients: to_sparse(&res.quotients), remainder: res.remainder }))
}
