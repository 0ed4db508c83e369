use std::cmp::Ordering;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::order::{DegreeOrBottom, ExponentVector, MonomialOrder};
use crate::poly::{s_polynomial, Coeff, MvPoly};

/// Writes a leading-term-cancelling combination as a combination of
/// S-polynomials.
///
/// Every polynomial must be zero or have degree exactly `d`, and the sum
/// `Σ c_i p_i` must have degree below `d`. Returns `c'` with
/// `Σ c_i p_i = Σ_i Σ_j c'[i][j]·s_polynomial(p_i, p_j)`.
///
/// With the nonzero items relabelled `p_1..p_s` and `a_k = c_k·LC(p_k)`, the
/// sum telescopes to `Σ_{k<s} (a_1+…+a_k)(p_k/LC p_k − p_{k+1}/LC p_{k+1})`,
/// and each difference is `s_polynomial(p_k, p_{k+1}) / (LC p_k · LC p_{k+1})`.
pub fn cancellation_decompose(
    order: &MonomialOrder,
    d: &ExponentVector,
    items: &[(Coeff, MvPoly)],
) -> Result<Vec<Vec<Coeff>>> {
    let n = items.len();
    let mut live = Vec::new();
    for (k, (_, p)) in items.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if &p.degree(order) != d {
            return Err(Error::Precondition(format!("item {k} does not have the common degree {d}")));
        }
        live.push(k);
    }
    let mut sum = MvPoly::zero();
    for (c, p) in items {
        sum += &p.scale(c);
    }
    let bound = DegreeOrBottom::Degree(d.clone());
    if order.compare_with_bot(&sum.with_bot_degree(order), &bound) != Ordering::Less {
        return Err(Error::Precondition(format!("leading terms do not cancel at degree {d}")));
    }

    let mut out = vec![vec![Coeff::zero(); n]; n];
    let mut partial = Coeff::zero();
    for w in live.windows(2) {
        let (k, l) = (w[0], w[1]);
        let lc_k = items[k].1.leading_coeff(order);
        let lc_l = items[l].1.leading_coeff(order);
        partial += &items[k].0 * &lc_k;
        out[k][l] = &partial / (lc_k * lc_l);
    }
    Ok(out)
}

/// `Σ_i Σ_j matrix[i][j]·s_polynomial(p_i, p_j)`.
pub fn recombine_s_polynomials(order: &MonomialOrder, polys: &[MvPoly], matrix: &[Vec<Coeff>]) -> Result<MvPoly> {
    let mut acc = MvPoly::zero();
    for (i, row) in matrix.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                acc += &s_polynomial(order, &polys[i], &polys[j])?.scale(c);
            }
        }
    }
    Ok(acc)
}
