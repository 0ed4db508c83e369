//! Variable injections between polynomial rings.
//!
//! An injection `f: σ' → σ` lifts exponent vectors and renames polynomials
//! from the source ring into the target ring. Pulling a target monomial
//! order back along `f` gives the induced source order, and the pair is then
//! an order embedding. The checks here execute the invariance results for
//! remainders and Groebner bases on concrete inputs, and the liminf
//! construction recovers a reduced basis from reduced bases of the
//! contractions to the prefix subrings `k[x0..x_{n-1}]`.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use rayon::prelude::*;

use crate::division::check_remainder_witness;
use crate::error::{Error, Result};
use crate::groebner::{
    check_buchberger_criterion, member_of_ideal, reduced_groebner, BuchbergerConfig, CriterionReport, GroebnerBasis,
};
use crate::order::{ExponentVector, MonomialOrder, OrderKind, Precedence, Var};
use crate::poly::{cmp_leading, MvPoly};

/// A finite injective map stored with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMap {
    forward: BTreeMap<Var, Var>,
    backward: BTreeMap<Var, Var>,
}

impl FiniteMap {
    fn new(pairs: impl IntoIterator<Item = (Var, Var)>) -> Result<Self> {
        let mut forward = BTreeMap::new();
        let mut backward: BTreeMap<Var, Var> = BTreeMap::new();
        for (s, t) in pairs {
            if let Some(prev) = forward.insert(s, t) {
                if prev != t {
                    return Err(Error::Precondition(format!("{s} is mapped twice")));
                }
                continue;
            }
            if let Some(&other) = backward.get(&t) {
                return Err(Error::NotInjective(other, s));
            }
            backward.insert(t, s);
        }
        Ok(Self { forward, backward })
    }
}

/// An injective map on variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VarInjection {
    /// `i ↦ i + k`.
    Shift(u32),
    /// A bijection of a finite set of variables, identity elsewhere.
    Permutation(Arc<FiniteMap>),
    /// A finite injective map; variables outside its domain are not mapped.
    Finite(Arc<FiniteMap>),
}

impl VarInjection {
    pub fn identity() -> Self {
        VarInjection::Shift(0)
    }

    pub fn shift(k: u32) -> Self {
        VarInjection::Shift(k)
    }

    /// A finite injective map with domain the given sources.
    pub fn finite(pairs: impl IntoIterator<Item = (Var, Var)>) -> Result<Self> {
        Ok(VarInjection::Finite(Arc::new(FiniteMap::new(pairs)?)))
    }

    /// A permutation of a finite set; the images must be exactly the sources.
    pub fn permutation(pairs: impl IntoIterator<Item = (Var, Var)>) -> Result<Self> {
        let map = FiniteMap::new(pairs)?;
        let dom: BTreeSet<_> = map.forward.keys().collect();
        let img: BTreeSet<_> = map.backward.keys().collect();
        if dom != img {
            return Err(Error::Precondition("a permutation must map its support onto itself".into()));
        }
        Ok(VarInjection::Permutation(Arc::new(map)))
    }

    pub fn is_identity(&self) -> bool {
        match self {
            VarInjection::Shift(k) => *k == 0,
            VarInjection::Permutation(m) | VarInjection::Finite(m) => m.forward.iter().all(|(s, t)| s == t),
        }
    }

    pub fn apply(&self, v: Var) -> Result<Var> {
        match self {
            VarInjection::Shift(k) => v.0.checked_add(*k).map(Var).ok_or(Error::VarOverflow(v)),
            VarInjection::Permutation(m) => Ok(m.forward.get(&v).copied().unwrap_or(v)),
            VarInjection::Finite(m) => m.forward.get(&v).copied().ok_or(Error::NotInDomain(v)),
        }
    }

    /// The preimage of `w`, if `w` is in the image.
    pub fn preimage(&self, w: Var) -> Option<Var> {
        match self {
            VarInjection::Shift(k) => w.0.checked_sub(*k).map(Var),
            VarInjection::Permutation(m) => Some(m.backward.get(&w).copied().unwrap_or(w)),
            VarInjection::Finite(m) => m.backward.get(&w).copied(),
        }
    }
}

pub fn lift_exponent(inj: &VarInjection, e: &ExponentVector) -> Result<ExponentVector> {
    e.map_vars(|v| inj.apply(v))
}

/// Renames every variable along the injection; coefficients are unchanged.
pub fn rename_poly(inj: &VarInjection, p: &MvPoly) -> Result<MvPoly> {
    p.map_exponents(|e| lift_exponent(inj, e))
}

pub fn rename_all(inj: &VarInjection, ps: &[MvPoly]) -> Result<Vec<MvPoly>> {
    ps.iter().map(|p| rename_poly(inj, p)).collect()
}

/// Sets every variable outside the image to zero and pulls the surviving
/// monomials back to the source ring.
pub fn restrict_poly(inj: &VarInjection, p: &MvPoly) -> MvPoly {
    MvPoly::from_terms(p.terms().filter_map(|(e, c)| {
        let pulled: Option<Vec<(Var, u64)>> = e.iter().map(|(v, k)| inj.preimage(v).map(|w| (w, k))).collect();
        // preimages of distinct variables are distinct, so this cannot overflow
        pulled.map(|pairs| (ExponentVector::new(pairs).expect("distinct variables"), c.clone()))
    }))
}

/// The source order obtained by pulling `target` back along `inj`:
/// `u ≤ v` iff `lift(u) ≤ lift(v)` under `target`.
pub fn induced_order(target: &MonomialOrder, inj: &VarInjection) -> MonomialOrder {
    if inj.is_identity() {
        return target.clone();
    }
    MonomialOrder::new(
        target.kind(),
        Precedence::Pullback { injection: inj.clone(), target: Arc::new(target.precedence().clone()) },
    )
}

/// An injection together with orders on both sides, monotone under lifting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderEmbedding {
    pub injection: VarInjection,
    pub source: MonomialOrder,
    pub target: MonomialOrder,
}

impl OrderEmbedding {
    /// Equips the source with the induced order; monotone by construction.
    pub fn of_injective(target: MonomialOrder, injection: VarInjection) -> Self {
        let source = induced_order(&target, &injection);
        Self { injection, source, target }
    }

    /// Takes arbitrary orders and checks monotonicity on every pair drawn
    /// from `samples`.
    pub fn new_checked(
        injection: VarInjection,
        source: MonomialOrder,
        target: MonomialOrder,
        samples: &[ExponentVector],
    ) -> Result<Self> {
        let emb = Self { injection, source, target };
        if !emb.is_monotone_on(samples)? {
            return Err(Error::Precondition("lift is not monotone between the given orders".into()));
        }
        Ok(emb)
    }

    pub fn is_monotone_on(&self, samples: &[ExponentVector]) -> Result<bool> {
        let lifted: Vec<_> = samples.iter().map(|e| self.lift(e)).collect::<Result<_>>()?;
        for (u, lu) in samples.iter().zip(&lifted) {
            for (v, lv) in samples.iter().zip(&lifted) {
                if self.source.compare(u, v).is_le() && !self.target.compare(lu, lv).is_le() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn lift(&self, e: &ExponentVector) -> Result<ExponentVector> {
        lift_exponent(&self.injection, e)
    }

    pub fn rename(&self, p: &MvPoly) -> Result<MvPoly> {
        rename_poly(&self.injection, p)
    }

    pub fn restrict(&self, p: &MvPoly) -> MvPoly {
        restrict_poly(&self.injection, p)
    }
}

/// Outcome of transporting a remainder witness across an embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RemainderInvariance {
    /// The witness is valid in the source ring.
    pub source_valid: bool,
    /// Its renaming is valid in the target ring.
    pub target_valid: bool,
    /// The renamed witness, restricted back, is valid in the source ring.
    pub restricted_valid: bool,
}

impl RemainderInvariance {
    pub fn holds(&self) -> bool {
        self.source_valid == self.target_valid && (!self.target_valid || self.restricted_valid)
    }
}

/// Checks a source-side remainder witness on both sides of the embedding.
pub fn check_remainder_invariance(
    emb: &OrderEmbedding,
    p: &MvPoly,
    basis: &[MvPoly],
    quotients: &[MvPoly],
    r: &MvPoly,
) -> Result<RemainderInvariance> {
    let source_valid = check_remainder_witness(&emb.source, p, basis, quotients, r)?;
    let tp = emb.rename(p)?;
    let tb = rename_all(&emb.injection, basis)?;
    let tq = rename_all(&emb.injection, quotients)?;
    let tr = emb.rename(r)?;
    let target_valid = check_remainder_witness(&emb.target, &tp, &tb, &tq, &tr)?;
    let restricted_valid = check_kill_complement(emb, p, basis, &tq, &tr)?.unwrap_or(true);
    Ok(RemainderInvariance { source_valid, target_valid, restricted_valid })
}

/// Given a target-side witness for the renamed problem, restricts it back.
/// `None` if the target witness is itself invalid; otherwise whether the
/// restricted witness is valid in the source ring.
pub fn check_kill_complement(
    emb: &OrderEmbedding,
    p: &MvPoly,
    basis: &[MvPoly],
    target_quotients: &[MvPoly],
    target_r: &MvPoly,
) -> Result<Option<bool>> {
    let tp = emb.rename(p)?;
    let tb = rename_all(&emb.injection, basis)?;
    if !check_remainder_witness(&emb.target, &tp, &tb, target_quotients, target_r)? {
        return Ok(None);
    }
    let q: Vec<MvPoly> = target_quotients.iter().map(|q| emb.restrict(q)).collect();
    let r = emb.restrict(target_r);
    Ok(Some(check_remainder_witness(&emb.source, p, basis, &q, &r)?))
}

/// Criterion verdicts and generator membership on both sides of an embedding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbInvariance {
    pub source: CriterionReport,
    pub target: CriterionReport,
    /// Every generator reduces to zero over the basis, in the source ring.
    pub source_spans: bool,
    pub target_spans: bool,
}

impl GbInvariance {
    pub fn holds(&self) -> bool {
        let pair = |r: &CriterionReport| r.failure.as_ref().map(|f| (f.i, f.j));
        self.source.holds == self.target.holds
            && pair(&self.source) == pair(&self.target)
            && self.source_spans == self.target_spans
    }

    /// `basis` is a Groebner basis of the generated ideal on both sides.
    pub fn is_groebner_both_ways(&self) -> bool {
        self.holds() && self.source.holds && self.source_spans
    }
}

pub fn check_gb_invariance(emb: &OrderEmbedding, basis: &[MvPoly], generators: &[MvPoly]) -> Result<GbInvariance> {
    let tb = rename_all(&emb.injection, basis)?;
    let tg = rename_all(&emb.injection, generators)?;
    let source = check_buchberger_criterion(&emb.source, basis)?;
    let target = check_buchberger_criterion(&emb.target, &tb)?;
    let spans = |order: &MonomialOrder, b: &[MvPoly], gens: &[MvPoly]| -> Result<bool> {
        for g in gens {
            if !crate::division::divide(order, g, b)?.remainder.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let source_spans = spans(&emb.source, basis, generators)?;
    let target_spans = spans(&emb.target, &tb, &tg)?;
    Ok(GbInvariance { source, target, source_spans, target_spans })
}

/// A basis computed in a finite subring and lifted back.
#[derive(Clone, Debug)]
pub struct FiniteReduction {
    /// Maps `x0..x_{k-1}` onto the variables actually used.
    pub embedding: OrderEmbedding,
    /// The reduced basis in the small ring.
    pub source_basis: GroebnerBasis,
    /// The same basis renamed into the original ring.
    pub basis: GroebnerBasis,
}

/// Reduced basis for finitely many generators over an unbounded variable set.
///
/// Compresses the used variables to `x0..x_{k-1}`, computes there under the
/// induced order and renames the result back.
pub fn finite_gb_over_infinite_vars(
    target: &MonomialOrder,
    generators: &[MvPoly],
    config: &BuchbergerConfig,
) -> Result<FiniteReduction> {
    let used: BTreeSet<Var> = generators.iter().flat_map(|g| g.vars()).collect();
    let injection = VarInjection::finite(used.iter().enumerate().map(|(k, &v)| (Var(k as u32), v)))?;
    let embedding = OrderEmbedding::of_injective(target.clone(), injection);
    let small: Vec<MvPoly> = generators.iter().map(|g| embedding.restrict(g)).collect();
    let source_basis = reduced_groebner(&embedding.source, &small, config)?;
    let elements = rename_all(&embedding.injection, source_basis.elements())?;
    let cofactors = source_basis
        .cofactors()
        .iter()
        .map(|row| rename_all(&embedding.injection, row))
        .collect::<Result<_>>()?;
    let basis = GroebnerBasis::from_parts(target.clone(), elements, generators.to_vec(), cofactors);
    Ok(FiniteReduction { embedding, source_basis, basis })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiminfVerdict {
    /// The prefix bases stabilize and the limit is the reduced basis of the ideal.
    Holds,
    /// The prefix bases stabilize on a set that is not the reduced basis.
    Fails,
    /// The given prefixes do not show stabilization.
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct LiminfReport {
    /// Number of variables the generators live in: `1 + max id`.
    pub num_vars: usize,
    /// `(n, G_n)`: reduced basis of the contraction to `k[x0..x_{n-1}]`.
    pub per_prefix: Vec<(usize, Vec<MvPoly>)>,
    /// `⋃_a ⋂_{i ≥ a} G_i` over the given prefixes.
    pub liminf: Vec<MvPoly>,
    /// Least prefix from which all later bases agree.
    pub stabilized_at: Option<usize>,
    /// Reduced basis of the ideal computed directly.
    pub direct: Vec<MvPoly>,
    /// Every `G_n` lies in the ideal, and every direct basis element inside
    /// `k[x0..x_{n-1}]` lies in `⟨G_n⟩`.
    pub cross_checked: bool,
    pub verdict: LiminfVerdict,
}

fn prefix_basis(order: &MonomialOrder, generators: &[MvPoly], n: usize, v: usize, config: &BuchbergerConfig) -> Result<GroebnerBasis> {
    if n >= v {
        return reduced_groebner(order, generators, config);
    }
    // eliminate x_n..x_{v-1}: lex with the eliminated block first
    let precedence: Vec<Var> = (n..v).chain(0..n).map(|i| Var(i as u32)).collect();
    let elim = MonomialOrder::new(OrderKind::Lex, Precedence::explicit(precedence)?);
    let eliminated = reduced_groebner(&elim, generators, config)?;
    let kept: Vec<MvPoly> = eliminated
        .elements()
        .iter()
        .filter(|g| g.vars().iter().all(|w| (w.0 as usize) < n))
        .cloned()
        .collect();
    reduced_groebner(order, &kept, config)
}

/// Reduced bases of the contractions `I ∩ k[x0..x_{n-1}]` for each prefix
/// size, their liminf under the cofinite filter, and a comparison with the
/// reduced basis of `I`.
pub fn liminf_reduced_gb(
    order: &MonomialOrder,
    generators: &[MvPoly],
    prefix_sizes: &[usize],
    config: &BuchbergerConfig,
) -> Result<LiminfReport> {
    if prefix_sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition("prefix sizes must be strictly ascending".into()));
    }
    let num_vars = generators
        .iter()
        .flat_map(|g| g.vars())
        .map(|w| w.0 as usize + 1)
        .max()
        .unwrap_or(0);

    let direct = reduced_groebner(order, generators, config)?;
    let bases: Vec<GroebnerBasis> = prefix_sizes
        .par_iter()
        .map(|&n| prefix_basis(order, generators, n, num_vars, config))
        .collect::<Result<_>>()?;

    let mut cross_checked = true;
    for (gn, &n) in bases.iter().zip(prefix_sizes) {
        for g in gn.elements() {
            cross_checked &= member_of_ideal(&direct, g)?.0;
        }
        for g in direct.elements().iter().filter(|g| g.vars().iter().all(|w| (w.0 as usize) < n)) {
            cross_checked &= member_of_ideal(gn, g)?.0;
        }
    }

    let sets: Vec<BTreeSet<MvPoly>> = bases.iter().map(GroebnerBasis::element_set).collect();
    let mut liminf: BTreeSet<MvPoly> = BTreeSet::new();
    for a in 0..sets.len() {
        let mut tail = sets[a].clone();
        for s in &sets[a + 1..] {
            tail = tail.intersection(s).cloned().collect();
        }
        liminf.extend(tail);
    }
    let mut liminf: Vec<MvPoly> = liminf.into_iter().collect();
    liminf.sort_by(|a, b| cmp_leading(order, b, a));

    let stabilized_at = (0..sets.len())
        .find(|&a| sets[a..].windows(2).all(|w| w[0] == w[1]))
        .map(|a| prefix_sizes[a]);
    let tail_agrees = prefix_sizes.iter().any(|&n| n >= num_vars)
        && stabilized_at.is_some_and(|s| s <= *prefix_sizes.iter().find(|&&n| n >= num_vars).unwrap());
    let verdict = if !tail_agrees {
        LiminfVerdict::Inconclusive
    } else if liminf.iter().cloned().collect::<BTreeSet<_>>() == direct.element_set() {
        LiminfVerdict::Holds
    } else {
        LiminfVerdict::Fails
    };

    Ok(LiminfReport {
        num_vars,
        per_prefix: prefix_sizes.iter().copied().zip(bases.into_iter().map(GroebnerBasis::into_elements)).collect(),
        liminf,
        stabilized_at,
        direct: direct.into_elements(),
        cross_checked,
        verdict,
    })
}
