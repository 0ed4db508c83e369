use std::cmp::Ordering;
use std::collections::VecDeque;

use num_traits::{One, Zero};

use super::{BuchbergerConfig, GroebnerBasis, Strategy};
use crate::division::divide;
use crate::error::{Error, Result};
use crate::order::{ExponentVector, MonomialOrder};
use crate::poly::{s_polynomial, MvPoly};

struct Pair {
    i: usize,
    j: usize,
    lcm: ExponentVector,
}

enum Queue {
    Normal(Vec<Pair>),
    Fifo(VecDeque<Pair>),
}

impl Queue {
    fn push(&mut self, pair: Pair) {
        match self {
            Queue::Normal(v) => v.push(pair),
            Queue::Fifo(q) => q.push_back(pair),
        }
    }

    fn pop(&mut self, order: &MonomialOrder) -> Option<Pair> {
        match self {
            Queue::Fifo(q) => q.pop_front(),
            Queue::Normal(v) => {
                let best = (0..v.len()).min_by(|&a, &b| {
                    let (pa, pb) = (&v[a], &v[b]);
                    match order.compare(&pa.lcm, &pb.lcm) {
                        Ordering::Equal => (pa.i, pa.j).cmp(&(pb.i, pb.j)),
                        other => other,
                    }
                })?;
                Some(v.swap_remove(best))
            }
        }
    }
}

struct State<'a> {
    order: &'a MonomialOrder,
    basis: Vec<MvPoly>,
    leads: Vec<ExponentVector>,
    cofactors: Vec<Vec<MvPoly>>,
}

impl State<'_> {
    /// Cofactors of `s_polynomial(g_i, g_j)` over the generators.
    fn s_pair_cofactors(&self, i: usize, j: usize) -> Result<Vec<MvPoly>> {
        let (di, dj) = (&self.leads[i], &self.leads[j]);
        let (ci, cj) = (self.basis[i].leading_coeff(self.order), self.basis[j].leading_coeff(self.order));
        let (si, sj) = (dj.trunc_sub(di), di.trunc_sub(dj));
        self.cofactors[i]
            .iter()
            .zip(&self.cofactors[j])
            .map(|(a, b)| Ok(&a.mul_term(&si, &cj)? - &b.mul_term(&sj, &ci)?))
            .collect()
    }
}

/// Buchberger's algorithm.
///
/// Starts from the nonzero generators and repeatedly reduces pending
/// S-pairs over the current basis, appending every nonzero remainder (made
/// monic). On return every S-pair of the output reduces to zero over it, and
/// each element carries its cofactor expression over `generators`.
pub fn buchberger(order: &MonomialOrder, generators: &[MvPoly], config: &BuchbergerConfig) -> Result<GroebnerBasis> {
    let n = generators.len();
    let mut state = State { order, basis: Vec::new(), leads: Vec::new(), cofactors: Vec::new() };
    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut unit = vec![MvPoly::zero(); n];
        unit[j] = MvPoly::one();
        state.leads.push(g.degree(order));
        state.basis.push(g.clone());
        state.cofactors.push(unit);
    }

    let mut queue = match config.strategy {
        Strategy::Normal => Queue::Normal(Vec::new()),
        Strategy::Fifo => Queue::Fifo(VecDeque::new()),
    };
    for j in 0..state.basis.len() {
        for i in 0..j {
            queue.push(Pair { i, j, lcm: state.leads[i].lcm(&state.leads[j]) });
        }
    }

    let mut reductions = 0usize;
    while let Some(Pair { i, j, .. }) = queue.pop(order) {
        if config.coprime_skip && state.leads[i].is_coprime(&state.leads[j]) {
            continue;
        }
        if reductions >= config.budget {
            return Err(Error::BudgetExceeded { limit: config.budget });
        }
        reductions += 1;

        let s = s_polynomial(order, &state.basis[i], &state.basis[j])?;
        let res = divide(order, &s, &state.basis)?;
        if res.remainder.is_zero() {
            continue;
        }

        let mut cof = state.s_pair_cofactors(i, j)?;
        for (q, row) in res.quotients.iter().zip(&state.cofactors) {
            if q.is_zero() {
                continue;
            }
            for (acc, c) in cof.iter_mut().zip(row) {
                if !c.is_zero() {
                    *acc -= &q.checked_mul(c)?;
                }
            }
        }
        let lc = res.remainder.leading_coeff(order);
        debug_assert!(!lc.is_zero());
        let (h, cof) = if lc.is_one() {
            (res.remainder, cof)
        } else {
            let inv = lc.recip();
            (res.remainder.scale(&inv), cof.iter().map(|c| c.scale(&inv)).collect())
        };

        let k = state.basis.len();
        let lead = h.degree(order);
        for (m, lm) in state.leads.iter().enumerate() {
            queue.push(Pair { i: m, j: k, lcm: lm.lcm(&lead) });
        }
        state.leads.push(lead);
        state.basis.push(h);
        state.cofactors.push(cof);
    }

    Ok(GroebnerBasis::from_parts(order.clone(), state.basis, generators.to_vec(), state.cofactors))
}
