//! Certificate bundles: everything a checker needs to accept a claimed
//! Groebner basis without recomputing it.

use std::collections::BTreeSet;

use rayon::prelude::*;
use thiserror::Error;

use super::{check_buchberger_criterion, combine, member_of_ideal, to_dense, to_sparse, Cofactors, GroebnerBasis, SPairCertificate};
use crate::division::find_witness_violation;
use crate::error::Result;
use crate::order::MonomialOrder;
use crate::poly::MvPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateBundle {
    pub order: MonomialOrder,
    pub generators: Vec<MvPoly>,
    pub basis: Vec<MvPoly>,
    /// One certificate per unordered pair `i < j` of basis positions.
    pub s_pair_certs: Vec<SPairCertificate>,
    /// For each generator, cofactors over the basis with remainder zero.
    pub generator_certs: Vec<Cofactors>,
    /// For each basis element, cofactors over the generators.
    pub basis_certs: Vec<Cofactors>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertificateError {
    /// The bundle is not well formed: bad index, wrong coverage, wrong arity.
    #[error("malformed certificate: {0}")]
    Malformed(String),
    /// Well formed, but some identity or condition does not hold.
    #[error("verification failed: {0}")]
    Failed(String),
}

impl CertificateBundle {
    /// Produces a complete bundle for a verified basis.
    pub fn for_basis(gb: &GroebnerBasis) -> Result<Self> {
        gb.require_verified()?;
        let order = gb.order().clone();
        let report = check_buchberger_criterion(&order, gb.elements())?;
        if let Some(fail) = report.failure {
            return Err(crate::error::Error::Precondition(format!(
                "S-pair ({}, {}) does not reduce to zero",
                fail.i, fail.j
            )));
        }
        let mut generator_certs = Vec::with_capacity(gb.generators().len());
        for g in gb.generators() {
            let (member, cert) = member_of_ideal(gb, g)?;
            debug_assert!(member);
            generator_certs.push(cert.quotients);
        }
        let basis_certs = gb.cofactors().iter().map(|row| to_sparse(row)).collect();
        Ok(Self {
            order,
            generators: gb.generators().to_vec(),
            basis: gb.elements().to_vec(),
            s_pair_certs: report.certificates,
            generator_certs,
            basis_certs,
        })
    }

    pub fn verify(&self) -> Result<(), CertificateError> {
        verify_certificates(
            &self.order,
            &self.generators,
            &self.basis,
            &self.s_pair_certs,
            &self.generator_certs,
            &self.basis_certs,
        )
    }
}

fn malformed(msg: impl Into<String>) -> CertificateError {
    CertificateError::Malformed(msg.into())
}

fn dense_or_malformed(sparse: &Cofactors, len: usize, what: &str) -> Result<Vec<MvPoly>, CertificateError> {
    to_dense(sparse, len).ok_or_else(|| malformed(format!("{what}: cofactor position out of range (expected < {len})")))
}

/// Checks a claimed basis against its certificates, never recomputing a basis.
///
/// Accepts iff (a) the S-pair certificates cover every pair `i < j` exactly
/// once and each is a valid zero-remainder witness, (b) every generator has a
/// valid zero-remainder witness over the basis, and (c) every basis element
/// equals its stated combination of the generators. S-pair checks run in
/// parallel; the reported failure is always the first in pair order.
pub fn verify_certificates(
    order: &MonomialOrder,
    generators: &[MvPoly],
    basis: &[MvPoly],
    s_pair_certs: &[SPairCertificate],
    generator_certs: &[Cofactors],
    basis_certs: &[Cofactors],
) -> Result<(), CertificateError> {
    let t = basis.len();
    if let Some(k) = basis.iter().position(MvPoly::is_zero) {
        return Err(malformed(format!("basis element {k} is zero")));
    }
    if generator_certs.len() != generators.len() {
        return Err(malformed(format!(
            "{} generator certificates for {} generators",
            generator_certs.len(),
            generators.len()
        )));
    }
    if basis_certs.len() != t {
        return Err(malformed(format!("{} basis certificates for {} basis elements", basis_certs.len(), t)));
    }

    let mut seen = BTreeSet::new();
    for cert in s_pair_certs {
        if cert.i >= cert.j || cert.j >= t {
            return Err(malformed(format!("S-pair ({}, {}) is not a pair i < j < {t}", cert.i, cert.j)));
        }
        if !seen.insert((cert.i, cert.j)) {
            return Err(malformed(format!("S-pair ({}, {}) certified twice", cert.i, cert.j)));
        }
    }
    if seen.len() != t * t.saturating_sub(1) / 2 {
        let missing = (0..t)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .find(|p| !seen.contains(p))
            .expect("some pair is missing");
        return Err(malformed(format!("pair coverage incomplete: S-pair {missing:?} has no certificate")));
    }

    let mut pair_results: Vec<_> = s_pair_certs
        .par_iter()
        .map(|cert| {
            let dense = dense_or_malformed(&cert.quotients, t, &format!("S-pair ({}, {})", cert.i, cert.j))?;
            let s = crate::poly::s_polynomial(order, &basis[cert.i], &basis[cert.j])
                .map_err(|e| malformed(format!("S-pair ({}, {}): {e}", cert.i, cert.j)))?;
            let v = find_witness_violation(order, &s, basis, &dense, &MvPoly::zero())
                .map_err(|e| malformed(format!("S-pair ({}, {}): {e}", cert.i, cert.j)))?;
            Ok(((cert.i, cert.j), v))
        })
        .collect::<Result<Vec<_>, CertificateError>>()?;
    pair_results.sort_by_key(|(p, _)| *p);
    if let Some(((i, j), Some(v))) = pair_results.into_iter().find(|(_, v)| v.is_some()) {
        return Err(CertificateError::Failed(format!("S-pair ({i}, {j}): {v}")));
    }

    for (k, (g, cert)) in generators.iter().zip(generator_certs).enumerate() {
        let dense = dense_or_malformed(cert, t, &format!("generator {k}"))?;
        let v = find_witness_violation(order, g, basis, &dense, &MvPoly::zero())
            .map_err(|e| malformed(format!("generator {k}: {e}")))?;
        if let Some(v) = v {
            return Err(CertificateError::Failed(format!("generator {k} over the basis: {v}")));
        }
    }

    for (k, (b, cert)) in basis.iter().zip(basis_certs).enumerate() {
        let dense = dense_or_malformed(cert, generators.len(), &format!("basis element {k}"))?;
        let sum = combine(&dense, generators).map_err(|e| malformed(format!("basis element {k}: {e}")))?;
        if &sum != b {
            return Err(CertificateError::Failed(format!(
                "basis element {k} is not the stated combination of the generators"
            )));
        }
    }
    Ok(())
}
