use num_traits::One;

use super::{buchberger, BuchbergerConfig, GroebnerBasis};
use crate::division::{check_remainder_witness, divide, is_fully_reduced};
use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{cmp_leading, MvPoly};

/// Monic, and no element's leading exponent divides another's.
pub fn is_minimal(order: &MonomialOrder, basis: &[MvPoly]) -> bool {
    let leads: Vec<_> = basis.iter().map(|g| g.degree(order)).collect();
    basis.iter().all(|g| g.is_monic(order))
        && (0..basis.len()).all(|i| (0..basis.len()).all(|j| i == j || !leads[j].divides(&leads[i])))
}

/// Monic, and no monomial of any element is divisible by the leading
/// monomial of another element.
pub fn is_reduced(order: &MonomialOrder, basis: &[MvPoly]) -> bool {
    basis.iter().all(|g| g.is_monic(order))
        && (0..basis.len()).all(|i| is_fully_reduced(order, &basis[i], &without(basis, i)))
}

/// Monic, and every `p` is a remainder of itself over `G \ {p}`, witnessed
/// by zero cofactors.
pub fn is_reduced_formal(order: &MonomialOrder, basis: &[MvPoly]) -> Result<bool> {
    for (i, g) in basis.iter().enumerate() {
        if !g.is_monic(order) {
            return Ok(false);
        }
        let rest = without(basis, i);
        let zeros = vec![MvPoly::zero(); rest.len()];
        if !check_remainder_witness(order, g, &rest, &zeros, g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn without(basis: &[MvPoly], i: usize) -> Vec<MvPoly> {
    basis
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, g)| g.clone())
        .collect()
}

/// Makes every element monic and drops elements whose leading exponent is
/// divisible by another's. Among elements with equal leading exponents the
/// first one is kept.
pub fn minimalize(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    gb.require_verified()?;
    let order = gb.order();
    let leads: Vec<_> = gb.elements().iter().map(|g| g.degree(order)).collect();
    let mut elements = Vec::new();
    let mut cofactors = Vec::new();
    for (i, (g, row)) in gb.elements().iter().zip(gb.cofactors()).enumerate() {
        let redundant = leads
            .iter()
            .enumerate()
            .any(|(j, lj)| j != i && lj.divides(&leads[i]) && (lj != &leads[i] || j < i));
        if redundant {
            continue;
        }
        let lc = g.leading_coeff(order);
        if lc.is_one() {
            elements.push(g.clone());
            cofactors.push(row.clone());
        } else {
            let inv = lc.recip();
            elements.push(g.scale(&inv));
            cofactors.push(row.iter().map(|c| c.scale(&inv)).collect());
        }
    }
    Ok(GroebnerBasis::from_parts(order.clone(), elements, gb.generators().to_vec(), cofactors))
}

/// Replaces each element of a minimal basis by its remainder over the other
/// elements. Leading monomials are unchanged.
pub fn inter_reduce(gb: &GroebnerBasis) -> Result<GroebnerBasis> {
    gb.require_verified()?;
    let order = gb.order();
    if !is_minimal(order, gb.elements()) {
        return Err(Error::Precondition("inter-reduction needs a minimal basis".into()));
    }
    let elements = gb.elements();
    let mut out = Vec::with_capacity(elements.len());
    let mut out_cof = Vec::with_capacity(elements.len());
    for i in 0..elements.len() {
        let others = without(elements, i);
        let res = divide(order, &elements[i], &others)?;
        let mut row = gb.cofactors()[i].clone();
        let other_rows = gb.cofactors().iter().enumerate().filter(|&(k, _)| k != i).map(|(_, r)| r);
        for (q, orow) in res.quotients.iter().zip(other_rows) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in row.iter_mut().zip(orow) {
                if !c.is_zero() {
                    *acc -= &q.checked_mul(c)?;
                }
            }
        }
        out.push(res.remainder);
        out_cof.push(row);
    }
    Ok(GroebnerBasis::from_parts(order.clone(), out, gb.generators().to_vec(), out_cof))
}

/// The reduced Groebner basis of the ideal generated by `generators`,
/// sorted descending by leading monomial. The zero ideal gives an empty basis.
pub fn reduced_groebner(order: &MonomialOrder, generators: &[MvPoly], config: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let gb = buchberger(order, generators, config)?;
    let gb = inter_reduce(&minimalize(&gb)?)?;
    let mut idx: Vec<usize> = (0..gb.len()).collect();
    idx.sort_by(|&a, &b| cmp_leading(order, &gb.elements()[b], &gb.elements()[a]));
    let elements = idx.iter().map(|&i| gb.elements()[i].clone()).collect();
    let cofactors = idx.iter().map(|&i| gb.cofactors()[i].clone()).collect();
    Ok(GroebnerBasis::from_parts(order.clone(), elements, generators.to_vec(), cofactors))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{cyclic3, cyclic3_reduced, p};
    use super::super::Strategy;
    use super::*;
    use crate::poly::coeff;

    fn verified(order: &MonomialOrder, elements: Vec<MvPoly>) -> GroebnerBasis {
        GroebnerBasis::claimed(order.clone(), elements).verify().unwrap().unwrap()
    }

    #[test]
    fn cyclic3_reduced_basis() {
        let lex = MonomialOrder::lex();
        let gb = reduced_groebner(&lex, &cyclic3(), &BuchbergerConfig::default()).unwrap();
        assert_eq!(gb.elements(), &cyclic3_reduced()[..]);
        assert!(gb.cofactors_hold().unwrap());
        assert!(is_reduced(&lex, gb.elements()));
        assert!(is_reduced_formal(&lex, gb.elements()).unwrap());
    }

    #[test]
    fn canonical_under_permutation_scaling_and_strategy() {
        let lex = MonomialOrder::lex();
        let f = cyclic3();
        let variants = vec![
            vec![f[2].clone(), f[0].clone(), f[1].clone()],
            vec![f[1].scale(&coeff(-3)), f[2].clone(), f[0].scale(&crate::poly::ratio(1, 2))],
        ];
        for gens in variants {
            for strategy in [Strategy::Normal, Strategy::Fifo] {
                let cfg = BuchbergerConfig { strategy, ..Default::default() };
                let gb = reduced_groebner(&lex, &gens, &cfg).unwrap();
                assert_eq!(gb.elements(), &cyclic3_reduced()[..]);
                assert!(gb.cofactors_hold().unwrap());
            }
        }
    }

    #[test]
    fn zero_ideal_is_empty() {
        let gb = reduced_groebner(&MonomialOrder::lex(), &[MvPoly::zero()], &BuchbergerConfig::default()).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn minimalize_drops_multiples_and_normalizes() {
        let lex = MonomialOrder::lex();
        let g = cyclic3_reduced();
        let with_multiple = vec![g[0].clone(), g[1].clone(), &p("x1") * &g[1], g[2].clone()];
        let m = minimalize(&verified(&lex, with_multiple)).unwrap();
        assert_eq!(m.elements(), &g[..]);

        let m = minimalize(&verified(&lex, g.clone())).unwrap();
        assert_eq!(m.elements(), &g[..]);

        let scaled = vec![g[0].scale(&coeff(2)), g[1].clone(), g[2].clone()];
        let m = minimalize(&verified(&lex, scaled)).unwrap();
        assert_eq!(m.elements(), &g[..]);
        assert!(m.cofactors_hold().unwrap());
    }

    #[test]
    fn inter_reduce_cyclic3() {
        let lex = MonomialOrder::lex();
        let g1p = p("x0 + x1^2 + x1*x2 + x1 + x2^2 + x2");
        let g = cyclic3_reduced();
        let minimal = verified(&lex, vec![g1p.clone(), g[1].clone(), g[2].clone()]);
        assert!(is_minimal(&lex, minimal.elements()));
        assert!(!is_reduced(&lex, minimal.elements()));
        let r = inter_reduce(&minimal).unwrap();
        assert_eq!(r.elements(), &g[..]);
        assert!(r.cofactors_hold().unwrap());
        assert!(is_reduced_formal(&lex, r.elements()).unwrap());

        // fixed point
        let again = inter_reduce(&r).unwrap();
        assert_eq!(again.elements(), r.elements());
    }

    #[test]
    fn claimed_bases_are_rejected() {
        let gb = GroebnerBasis::claimed(MonomialOrder::lex(), cyclic3_reduced());
        assert_eq!(minimalize(&gb).unwrap_err(), Error::NotVerified);
    }

    #[test]
    fn inter_reduce_requires_minimal() {
        let lex = MonomialOrder::lex();
        let g = cyclic3_reduced();
        let not_minimal = verified(&lex, vec![g[0].clone(), g[1].clone(), g[2].clone(), &p("x2") * &g[2]]);
        assert!(matches!(inter_reduce(&not_minimal), Err(Error::Precondition(_))));
    }
}
