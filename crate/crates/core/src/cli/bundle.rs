//! JSON form of certificate bundles.
//!
//! A polynomial is a list of terms `[[[var, exp], ...], "num/den"]`,
//! descending under the bundle's monomial order; a cofactor family is a list of
//! `[position, polynomial]` with ascending positions and nonzero entries.
//! Decoding accepts only this canonical form, so a decoded bundle
//! re-serializes to the same bytes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::groebner::{CertificateBundle, CertificateError, Cofactors, SPairCertificate};
use crate::order::{ExponentVector, MonomialOrder, OrderKind, Precedence, Var};
use crate::poly::{Coeff, MvPoly};

pub const FORMAT_VERSION: u32 = 1;

type TermJson = (Vec<(u32, u64)>, String);
type PolyJson = Vec<TermJson>;
type CofactorsJson = Vec<(usize, PolyJson)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderJson {
    pub kind: String,
    /// Variable ids from highest to lowest precedence; absent for `x0 > x1 > ...`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precedence: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SPairJson {
    i: usize,
    j: usize,
    quotients: CofactorsJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BundleJson {
    format_version: u32,
    order: OrderJson,
    generators: Vec<PolyJson>,
    basis: Vec<PolyJson>,
    s_pair_certs: Vec<SPairJson>,
    generator_certs: Vec<CofactorsJson>,
    basis_certs: Vec<CofactorsJson>,
}

fn malformed(msg: impl Into<String>) -> CertificateError {
    CertificateError::Malformed(msg.into())
}

pub fn coeff_to_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn is_canonical_int(s: &str, allow_sign: bool) -> bool {
    let digits = if allow_sign { s.strip_prefix('-').unwrap_or(s) } else { s };
    !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && !(s.starts_with('-') && digits == "0")
}

/// Parses `"num/den"` in lowest terms with a positive denominator.
pub fn coeff_from_str(s: &str) -> Result<Coeff, String> {
    let (n, d) = s.split_once('/').ok_or_else(|| format!("coefficient `{s}` is not of the form num/den"))?;
    if !is_canonical_int(n, true) || !is_canonical_int(d, false) {
        return Err(format!("coefficient `{s}` is not a canonical num/den"));
    }
    let n: BigInt = n.parse().map_err(|_| format!("bad numerator in `{s}`"))?;
    let d: BigInt = d.parse().map_err(|_| format!("bad denominator in `{s}`"))?;
    if !d.is_positive() {
        return Err(format!("coefficient `{s}` has a non-positive denominator"));
    }
    let c = Coeff::new(n.clone(), d.clone());
    if c.numer() != &n || c.denom() != &d {
        return Err(format!("coefficient `{s}` is not in lowest terms"));
    }
    Ok(c)
}

fn poly_to_json(order: &MonomialOrder, p: &MvPoly) -> PolyJson {
    p.sorted_terms(order)
        .into_iter()
        .map(|(e, c)| (e.iter().map(|(v, k)| (v.0, k)).collect(), coeff_to_string(c)))
        .collect()
}

fn poly_from_json(order: &MonomialOrder, p: &PolyJson, what: &str) -> Result<MvPoly, CertificateError> {
    let mut prev: Option<ExponentVector> = None;
    let mut terms = Vec::with_capacity(p.len());
    for (pairs, c) in p {
        if pairs.windows(2).any(|w| w[0].0 >= w[1].0) || pairs.iter().any(|&(_, k)| k == 0) {
            return Err(malformed(format!("{what}: exponent pairs must have ascending variables and positive exponents")));
        }
        let e = ExponentVector::new(pairs.iter().map(|&(v, k)| (Var(v), k)))
            .map_err(|err| malformed(format!("{what}: {err}")))?;
        if prev.as_ref().is_some_and(|q| order.compare(q, &e).is_le()) {
            return Err(malformed(format!("{what}: terms are not in descending order")));
        }
        let c = coeff_from_str(c).map_err(|m| malformed(format!("{what}: {m}")))?;
        if c.is_zero() {
            return Err(malformed(format!("{what}: zero coefficient")));
        }
        prev = Some(e.clone());
        terms.push((e, c));
    }
    Ok(MvPoly::from_terms(terms))
}

fn cofactors_to_json(order: &MonomialOrder, c: &Cofactors) -> CofactorsJson {
    c.iter().map(|(&k, q)| (k, poly_to_json(order, q))).collect()
}

fn cofactors_from_json(order: &MonomialOrder, c: &CofactorsJson, what: &str) -> Result<Cofactors, CertificateError> {
    if c.windows(2).any(|w| w[0].0 >= w[1].0) {
        return Err(malformed(format!("{what}: cofactor positions must be strictly ascending")));
    }
    let mut out = Cofactors::new();
    for (k, q) in c {
        let q = poly_from_json(order, q, &format!("{what}, position {k}"))?;
        if q.is_zero() {
            return Err(malformed(format!("{what}: zero cofactor listed at position {k}")));
        }
        out.insert(*k, q);
    }
    Ok(out)
}

pub fn order_to_json(order: &MonomialOrder) -> Result<OrderJson, String> {
    let precedence = match order.precedence() {
        Precedence::Natural => None,
        Precedence::Explicit(list) => Some(list.iter().map(|v| v.0).collect()),
        Precedence::Pullback { .. } => return Err("an induced order has no JSON form".into()),
    };
    Ok(OrderJson { kind: order.kind().as_str().to_string(), precedence })
}

pub fn order_from_json(o: &OrderJson) -> Result<MonomialOrder, String> {
    let kind: OrderKind = o.kind.parse()?;
    if kind.as_str() != o.kind {
        return Err(format!("order kind `{}` is not canonical", o.kind));
    }
    let precedence = match &o.precedence {
        None => Precedence::Natural,
        Some(list) => Precedence::explicit(list.iter().map(|&v| Var(v)).collect()).map_err(|e| e.to_string())?,
    };
    Ok(MonomialOrder::new(kind, precedence))
}

pub fn bundle_to_json(b: &CertificateBundle) -> Result<String, String> {
    let json = BundleJson {
        format_version: FORMAT_VERSION,
        order: order_to_json(&b.order)?,
        generators: b.generators.iter().map(|p| poly_to_json(&b.order, p)).collect(),
        basis: b.basis.iter().map(|p| poly_to_json(&b.order, p)).collect(),
        s_pair_certs: b
            .s_pair_certs
            .iter()
            .map(|c| SPairJson { i: c.i, j: c.j, quotients: cofactors_to_json(&b.order, &c.quotients) })
            .collect(),
        generator_certs: b.generator_certs.iter().map(|c| cofactors_to_json(&b.order, c)).collect(),
        basis_certs: b.basis_certs.iter().map(|c| cofactors_to_json(&b.order, c)).collect(),
    };
    let mut out = serde_json::to_string_pretty(&json).map_err(|e| e.to_string())?;
    out.push('\n');
    Ok(out)
}

/// Decodes a bundle. Any deviation from the canonical form is malformed.
pub fn bundle_from_json(text: &str) -> Result<CertificateBundle, CertificateError> {
    let json: BundleJson = serde_json::from_str(text).map_err(|e| malformed(format!("invalid bundle JSON: {e}")))?;
    if json.format_version != FORMAT_VERSION {
        return Err(malformed(format!("unsupported format version {}", json.format_version)));
    }
    let order = order_from_json(&json.order).map_err(malformed)?;
    let polys = |ps: &[PolyJson], what: &str| -> Result<Vec<MvPoly>, CertificateError> {
        ps.iter().enumerate().map(|(k, p)| poly_from_json(&order, p, &format!("{what} {k}"))).collect()
    };
    let generators = polys(&json.generators, "generator")?;
    let basis = polys(&json.basis, "basis element")?;
    let mut seen = BTreeSet::new();
    let s_pair_certs = json
        .s_pair_certs
        .iter()
        .map(|c| {
            if !seen.insert((c.i, c.j)) {
                return Err(malformed(format!("S-pair ({}, {}) certified twice", c.i, c.j)));
            }
            let quotients = cofactors_from_json(&order, &c.quotients, &format!("S-pair ({}, {})", c.i, c.j))?;
            Ok(SPairCertificate { i: c.i, j: c.j, quotients })
        })
        .collect::<Result<_, _>>()?;
    let families = |cs: &[CofactorsJson], what: &str| -> Result<Vec<Cofactors>, CertificateError> {
        cs.iter().enumerate().map(|(k, c)| cofactors_from_json(&order, c, &format!("{what} {k}"))).collect()
    };
    let generator_certs = families(&json.generator_certs, "generator certificate")?;
    let basis_certs = families(&json.basis_certs, "basis certificate")?;
    Ok(CertificateBundle { order, generators, basis, s_pair_certs, generator_certs, basis_certs })
}

/// A polynomial as JSON, for command results.
pub fn poly_value(order: &MonomialOrder, p: &MvPoly) -> serde_json::Value {
    serde_json::to_value(poly_to_json(order, p)).expect("plain data")
}
