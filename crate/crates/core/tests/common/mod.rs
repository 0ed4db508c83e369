#![allow(dead_code)]

use gbcert::cli::parse::parse_poly;
use gbcert::order::{ExponentVector, MonomialOrder};
use gbcert::poly::{coeff, MvPoly};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn p(s: &str) -> MvPoly {
    parse_poly(s).unwrap()
}

pub fn cyclic3() -> Vec<MvPoly> {
    vec![p("x0 + x1 + x2"), p("x0*x1 + x1*x2 + x2*x0"), p("x0*x1*x2 - 1")]
}

pub fn cyclic3_reduced() -> Vec<MvPoly> {
    vec![p("x0 + x1 + x2"), p("x1^2 + x1*x2 + x2^2"), p("x2^3 - 1")]
}

pub fn orders() -> Vec<MonomialOrder> {
    vec![MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()]
}

/// A random exponent vector in `nvars` variables with total degree at most `max_deg`.
pub fn random_exponent(rng: &mut impl Rng, nvars: usize, max_deg: u64) -> ExponentVector {
    let total = rng.gen_range(0..=max_deg);
    let mut e = vec![0u64; nvars];
    for _ in 0..total {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExponentVector::from_dense(&e)
}

/// A random polynomial with integer coefficients in `[-c, c]`.
pub fn random_poly(rng: &mut impl Rng, nvars: usize, max_deg: u64, max_terms: usize, c: i64) -> MvPoly {
    let n = rng.gen_range(1..=max_terms);
    MvPoly::from_terms((0..n).map(|_| (random_exponent(rng, nvars, max_deg), coeff(rng.gen_range(-c..=c)))))
}

pub fn random_nonzero_poly(rng: &mut impl Rng, nvars: usize, max_deg: u64, max_terms: usize, c: i64) -> MvPoly {
    loop {
        let q = random_poly(rng, nvars, max_deg, max_terms, c);
        if !q.is_zero() {
            return q;
        }
    }
}

/// Up to four generators in at most three variables, total degree at most
/// three, coefficients in `[-5, 5]`.
pub fn random_instance(rng: &mut impl Rng) -> Vec<MvPoly> {
    // few generators per variable and some constant-free generators keep
    // most ideals proper
    let nvars = rng.gen_range(1..=3);
    let k = rng.gen_range(1..=(nvars + 1).min(4));
    (0..k)
        .map(|_| {
            let q = random_nonzero_poly(rng, nvars, 3, 3, 5);
            let affine = rng.gen_bool(0.5);
            let q = MvPoly::from_terms(q.into_terms().filter(|(e, _)| affine || !e.is_zero()));
            if q.is_zero() {
                MvPoly::var(gbcert::order::Var(0))
            } else {
                q
            }
        })
        .collect()
}

pub fn shuffled<T: Clone>(rng: &mut impl Rng, xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.shuffle(rng);
    v
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut v = rest.clone();
            v.insert(pos, n - 1);
            out.push(v);
        }
    }
    out
}

/// Runs the CLI in-process.
pub fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut argv = vec!["gbcert"];
    argv.extend_from_slice(args);
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = gbcert::cli::run(argv, &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub const CYCLIC3_FILE: &str = "\
# Cyclic-3
order lex
generators:
  f1 = x0 + x1 + x2
  f2 = x0*x1 + x1*x2 + x2*x0
  f3 = x0*x1*x2 - 1
";

/// A problem file listing `gens` as generators.
pub fn problem_file(gens: &[MvPoly], order: &MonomialOrder) -> String {
    let mut s = format!("order {}\ngenerators:\n", order.kind());
    for g in gens {
        s.push_str(&format!("  {}\n", g.display(order)));
    }
    s
}
