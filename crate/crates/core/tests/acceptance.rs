//! End-to-end acceptance checks. Prints one PASS/FAIL line per check and
//! exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use gbcert::cli::bundle::bundle_from_json;
use gbcert::division::{check_remainder_witness, divide, find_witness_violation, is_fully_reduced};
use gbcert::embedding::{
    check_gb_invariance, check_kill_complement, check_remainder_invariance, liminf_reduced_gb, rename_all,
    LiminfVerdict, OrderEmbedding, VarInjection,
};
use gbcert::groebner::{
    cancellation_decompose, check_buchberger_criterion, combine, member_of_ideal, recombine_s_polynomials,
    reduced_groebner, BuchbergerConfig, GroebnerBasis, Strategy,
};
use gbcert::order::{DegreeOrBottom, MonomialOrder};
use gbcert::poly::{coeff, ratio, s_polynomial, Coeff, MvPoly};
use num_traits::Zero;
use rand::Rng;
use serde_json::Value;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, start: Instant, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn cyclic3_reproduction() -> Outcome {
    let start = Instant::now();
    let (code, out, err) = run_cli(&["gb", "compute", "--order", "lex", "--json"], CYCLIC3_FILE);
    within(Duration::from_secs(1), start, "gb compute")?;
    ensure(code == 0, || format!("exit {code}: {err}"))?;
    let bundle = bundle_from_json(&out).map_err(|e| e.to_string())?;
    ensure(bundle.basis == cyclic3_reduced(), || format!("basis {:?}", bundle.basis))?;
    bundle.verify().map_err(|e| e.to_string())?;

    let (code, text, _) = run_cli(&["gb", "compute", "--order", "lex"], CYCLIC3_FILE);
    ensure(code == 0, || format!("text mode exit {code}"))?;
    for line in ["g1 = x0 + x1 + x2", "g2 = x1^2 + x1*x2 + x2^2", "g3 = x2^3 - 1"] {
        ensure(text.contains(line), || format!("missing `{line}` in\n{text}"))?;
    }
    Ok(format!("basis {{x0+x1+x2, x1^2+x1x2+x2^2, x2^3-1}} in {:?}", start.elapsed()))
}

fn cyclic3_s_pair() -> Outcome {
    let lex = MonomialOrder::lex();
    let g = cyclic3_reduced();
    let s = s_polynomial(&lex, &g[0], &g[1]).map_err(|e| e.to_string())?;
    let expected = p("-x0*x1*x2 - x0*x2^2 + x1^3 + x1^2*x2");
    ensure(s == expected, || format!("S(g1, g2) = {}", s.display(&lex)))?;
    let res = divide(&lex, &s, &g).map_err(|e| e.to_string())?;
    ensure(res.remainder.is_zero(), || format!("remainder {}", res.remainder.display(&lex)))?;
    ensure(check_remainder_witness(&lex, &s, &g, &res.quotients, &res.remainder).unwrap(), || "own witness invalid".into())?;
    // the hand cofactors (-x1*x2 - x2^2, x1 + x2, 0) are a valid witness as well
    let by_hand = vec![p("-x1*x2 - x2^2"), p("x1 + x2"), MvPoly::zero()];
    ensure(check_remainder_witness(&lex, &s, &g, &by_hand, &MvPoly::zero()).unwrap(), || "hand cofactors rejected".into())?;
    Ok(format!("S(g1, g2) = {}, remainder 0", s.display(&lex)))
}

fn buchberger_criterion() -> Outcome {
    let lex = MonomialOrder::lex();
    let start = Instant::now();
    let good = check_buchberger_criterion(&lex, &cyclic3_reduced()).map_err(|e| e.to_string())?;
    within(Duration::from_secs(1), start, "criterion on G")?;
    ensure(good.holds && good.certificates.len() == 3, || format!("{good:?}"))?;
    for c in &good.certificates {
        ensure(c.violation(&lex, &cyclic3_reduced()).unwrap().is_none(), || format!("certificate ({}, {}) invalid", c.i, c.j))?;
    }
    let start = Instant::now();
    let bad = check_buchberger_criterion(&lex, &cyclic3()).map_err(|e| e.to_string())?;
    within(Duration::from_secs(1), start, "criterion on F")?;
    let fail = bad.failure.ok_or("criterion passed on the raw generators")?;
    // independent oracle: that S-polynomial's remainder is nonzero
    let f = cyclic3();
    let s = s_polynomial(&lex, &f[fail.i], &f[fail.j]).unwrap();
    ensure(!divide(&lex, &s, &f).unwrap().remainder.is_zero(), || "reported pair reduces to zero".into())?;
    Ok(format!("G: 3 certificates; F fails at S-pair ({}, {})", fail.i, fail.j))
}

/// The instances shared by the canonicity, uniqueness and membership checks.
fn canonicity_instances() -> Vec<(MonomialOrder, Vec<MvPoly>)> {
    let mut r = rng(4);
    let orders = orders();
    (0..210).map(|k| (orders[k % 3].clone(), random_instance(&mut r))).collect()
}

fn reduced_basis_canonicity(bases: &mut Vec<(MonomialOrder, Vec<MvPoly>, GroebnerBasis)>) -> Outcome {
    let mut r = rng(40);
    let mut checked = 0;
    let mut sizes = 0;
    let mut units = 0;
    for (order, gens) in canonicity_instances() {
        let base = reduced_groebner(&order, &gens, &BuchbergerConfig::default()).map_err(|e| e.to_string())?;
        let expected = base.element_set();
        let scaled: Vec<MvPoly> = gens
            .iter()
            .map(|g| {
                let n = loop {
                    let n = r.gen_range(-5i64..=5);
                    if n != 0 {
                        break n;
                    }
                };
                g.scale(&ratio(n, r.gen_range(1..=4)))
            })
            .collect();
        let variants = [shuffled(&mut r, &gens), scaled.clone(), shuffled(&mut r, &scaled)];
        let configs = [
            BuchbergerConfig { strategy: Strategy::Fifo, ..Default::default() },
            BuchbergerConfig { coprime_skip: true, ..Default::default() },
            BuchbergerConfig { strategy: Strategy::Fifo, coprime_skip: true, ..Default::default() },
            BuchbergerConfig::default(),
        ];
        for v in variants.iter().chain(std::iter::once(&gens)) {
            for cfg in &configs {
                let gb = reduced_groebner(&order, v, cfg).map_err(|e| e.to_string())?;
                ensure(gb.element_set() == expected, || {
                    format!("instance {gens:?} under {} and {cfg:?} gave {:?}", order.kind(), gb.elements())
                })?;
                checked += 1;
            }
        }
        ensure(base.cofactors_hold().unwrap(), || format!("cofactors of {gens:?} do not hold"))?;
        sizes += base.len();
        units += usize::from(base.elements() == [MvPoly::one()]);
        bases.push((order, gens, base));
    }
    Ok(format!(
        "{} instances ({units} unit ideals), {checked} recomputations agree, mean basis size {:.2}",
        bases.len(),
        sizes as f64 / bases.len() as f64
    ))
}

fn remainder_uniqueness(bases: &[(MonomialOrder, Vec<MvPoly>, GroebnerBasis)]) -> Outcome {
    let mut r = rng(5);
    let mut divisions = 0;
    for (order, _, gb) in bases {
        let g = gb.elements();
        let all = permutations(g.len());
        let perms: Vec<Vec<usize>> = if all.len() > 24 {
            (0..10).map(|_| shuffled(&mut r, &all[0])).collect()
        } else {
            all
        };
        let nvars = g.iter().flat_map(|q| q.vars()).map(|v| v.0 as usize + 1).max().unwrap_or(1).max(1);
        for _ in 0..20 {
            let f = random_poly(&mut r, nvars, 4, 5, 5);
            let mut first: Option<MvPoly> = None;
            for perm in &perms {
                let divisors: Vec<MvPoly> = perm.iter().map(|&i| g[i].clone()).collect();
                let rem = divide(order, &f, &divisors).map_err(|e| e.to_string())?.remainder;
                divisions += 1;
                match &first {
                    None => first = Some(rem),
                    Some(r0) => ensure(&rem == r0, || format!("remainder of {f:?} depends on divisor order over {g:?}"))?,
                }
            }
        }
    }
    Ok(format!("{} bases x 20 dividends, {divisions} divisions", bases.len()))
}

fn membership(bases: &[(MonomialOrder, Vec<MvPoly>, GroebnerBasis)]) -> Outcome {
    let mut r = rng(6);
    let (mut accepted, mut rejected) = (0, 0);
    for (order, gens, gb) in bases {
        let nvars = gens.iter().flat_map(|q| q.vars()).map(|v| v.0 as usize + 1).max().unwrap_or(1);
        for _ in 0..3 {
            let a: Vec<MvPoly> = gens.iter().map(|_| random_poly(&mut r, nvars, 2, 3, 4)).collect();
            let target = combine(&a, gens).unwrap();
            let (member, cert) = member_of_ideal(gb, &target).unwrap();
            ensure(member, || format!("combination {target:?} of {gens:?} rejected"))?;
            ensure(cert.check(gb, &target).unwrap(), || "membership certificate does not verify".into())?;
            let over_gens = gb.express_over_generators(&cert.dense(gb.len()).unwrap()).unwrap();
            ensure(combine(&over_gens, gens).unwrap() == target, || "transported cofactors wrong".into())?;
            accepted += 1;

            let q = random_poly(&mut r, nvars, 3, 4, 5);
            let (member, cert) = member_of_ideal(gb, &q).unwrap();
            ensure(cert.check(gb, &q).unwrap(), || "rejection witness does not verify".into())?;
            if !member {
                ensure(!cert.remainder.is_zero(), || "non-member with zero remainder".into())?;
                ensure(is_fully_reduced(order, &cert.remainder, gb.elements()), || "remainder not fully reduced".into())?;
                rejected += 1;
            } else {
                ensure(cert.remainder.is_zero(), || "member with nonzero remainder".into())?;
            }
        }
    }
    ensure(rejected > 0, || "no random polynomial was rejected".into())?;
    Ok(format!("{accepted} combinations accepted, {rejected} random polynomials rejected with reduced remainders"))
}

fn division_postconditions() -> Outcome {
    let mut r = rng(7);
    let orders = orders();
    for k in 0..1200 {
        let order = &orders[k % 3];
        let nvars = r.gen_range(1..=4);
        let f = random_poly(&mut r, nvars, 5, 6, 9);
        let nd = r.gen_range(0..=4);
        let divisors: Vec<MvPoly> = (0..nd).map(|_| random_poly(&mut r, nvars, 3, 3, 9)).collect();
        let res = divide(order, &f, &divisors).map_err(|e| e.to_string())?;
        let v = find_witness_violation(order, &f, &divisors, &res.quotients, &res.remainder).unwrap();
        ensure(v.is_none(), || format!("divide({f:?}, {divisors:?}) violates {}", v.unwrap()))?;
    }
    let lex = MonomialOrder::lex();
    let f = p("x0^2*x1 + x0*x1^2 + x1^2");
    let b = vec![p("x0*x1 - 1"), p("x1^2 - 1")];
    let r1 = divide(&lex, &f, &b).unwrap().remainder;
    let r2 = divide(&lex, &f, &[b[1].clone(), b[0].clone()]).unwrap().remainder;
    ensure(r1 == p("x0 + x1 + 1") && r2 == p("2*x0 + 1"), || format!("regression remainders {r1:?} / {r2:?}"))?;
    Ok(format!("1200 witnesses valid; divisor order changes {} into {}", r1.display(&lex), r2.display(&lex)))
}

fn degree_algebra() -> Outcome {
    let mut r = rng(8);
    let orders = orders();
    for o in &orders {
        ensure(MvPoly::zero().with_bot_degree(o) == DegreeOrBottom::Bottom, || "deg(0) is not bottom".into())?;
    }
    let mut zero_cases = 0;
    for k in 0..1200 {
        let o = &orders[k % 3];
        let nvars = r.gen_range(1..=4);
        let mk = |r: &mut rand_chacha::ChaCha8Rng| {
            if r.gen_bool(0.15) {
                MvPoly::zero()
            } else {
                random_poly(r, nvars, 4, 5, 7)
            }
        };
        let (a, b) = (mk(&mut r), mk(&mut r));
        zero_cases += usize::from(a.is_zero() || b.is_zero());
        let lhs = (&a * &b).with_bot_degree(o);
        let rhs = a.with_bot_degree(o).add(&b.with_bot_degree(o)).unwrap();
        ensure(lhs == rhs, || format!("deg({a:?} * {b:?}) mismatch under {}", o.kind()))?;
    }
    ensure(zero_cases > 0, || "no zero factors sampled".into())?;
    Ok(format!("1200 products ({zero_cases} with a zero factor)"))
}

fn embedding_invariance() -> Outcome {
    let mut r = rng(9);
    let orders = orders();
    let mut section_checks = 0;
    for k in 0..120 {
        let emb = OrderEmbedding::of_injective(orders[k % 3].clone(), VarInjection::shift(5));
        let gens = random_instance(&mut r);
        let nvars = gens.iter().flat_map(|q| q.vars()).map(|v| v.0 as usize + 1).max().unwrap_or(1);
        let f = random_poly(&mut r, nvars, 4, 5, 5);

        let res = divide(&emb.source, &f, &gens).unwrap();
        let inv = check_remainder_invariance(&emb, &f, &gens, &res.quotients, &res.remainder).unwrap();
        ensure(inv.source_valid && inv.target_valid && inv.restricted_valid, || format!("witness did not transport: {inv:?}"))?;

        let mut bad = res.quotients.clone();
        bad[0] = &bad[0] + &p("x0");
        let inv = check_remainder_invariance(&emb, &f, &gens, &bad, &res.remainder).unwrap();
        ensure(inv.holds() && !inv.source_valid, || format!("tampered witness verdicts differ: {inv:?}"))?;

        let tf = emb.rename(&f).unwrap();
        let tg = rename_all(&emb.injection, &gens).unwrap();
        let tres = divide(&emb.target, &tf, &tg).unwrap();
        ensure(
            check_kill_complement(&emb, &f, &gens, &tres.quotients, &tres.remainder).unwrap() == Some(true),
            || "target witness does not restrict to a source witness".into(),
        )?;

        let raw = check_gb_invariance(&emb, &gens, &gens).unwrap();
        ensure(raw.holds(), || format!("criterion verdicts differ on {gens:?}"))?;
        let gb = reduced_groebner(&emb.source, &gens, &BuchbergerConfig::default()).unwrap();
        let inv = check_gb_invariance(&emb, gb.elements(), &gens).unwrap();
        ensure(inv.is_groebner_both_ways(), || format!("reduced basis of {gens:?} not a basis in both rings"))?;
        let tgb = reduced_groebner(&emb.target, &tg, &BuchbergerConfig::default()).unwrap();
        ensure(rename_all(&emb.injection, gb.elements()).unwrap() == tgb.elements(), || "reduced basis does not commute with renaming".into())?;

        for q in gens.iter().chain([&f, &res.remainder]).chain(gb.elements()) {
            ensure(emb.restrict(&emb.rename(q).unwrap()) == *q, || format!("restrict(rename({q:?})) differs"))?;
            section_checks += 1;
        }
    }
    Ok(format!("120 instances under x_i -> x_(i+5); {section_checks} section checks"))
}

fn liminf_demo() -> Outcome {
    let lex = MonomialOrder::lex();
    let cfg = BuchbergerConfig::default();
    let rep = liminf_reduced_gb(&lex, &cyclic3(), &[1, 2, 3, 4, 5], &cfg).map_err(|e| e.to_string())?;
    let direct = reduced_groebner(&lex, &cyclic3(), &cfg).unwrap();
    ensure(rep.stabilized_at == Some(3), || format!("stabilized at {:?}", rep.stabilized_at))?;
    for (n, g) in &rep.per_prefix[2..] {
        ensure(g == &cyclic3_reduced(), || format!("G_{n} = {g:?}"))?;
    }
    ensure(rep.liminf == direct.elements(), || format!("liminf {:?}", rep.liminf))?;
    ensure(rep.verdict == LiminfVerdict::Holds && rep.cross_checked, || format!("verdict {:?}", rep.verdict))?;

    let rep2 = liminf_reduced_gb(&lex, &[p("x0 - x1")], &[1, 2, 3, 4], &cfg).map_err(|e| e.to_string())?;
    ensure(rep2.per_prefix[0].1.is_empty(), || format!("G_1 = {:?}", rep2.per_prefix[0].1))?;
    for (n, g) in &rep2.per_prefix[1..] {
        ensure(g == &vec![p("x0 - x1")], || format!("G_{n} = {g:?}"))?;
    }
    ensure(rep2.liminf == vec![p("x0 - x1")] && rep2.verdict == LiminfVerdict::Holds, || format!("{:?}", rep2.liminf))?;
    Ok("cyclic-3 stabilizes at n = 3 on the reduced basis; {x0 - x1}: G_1 empty, liminf {x0 - x1}".into())
}

fn self_bundles() -> Vec<String> {
    let mut out = Vec::new();
    for order in ["lex", "grlex", "grevlex"] {
        let (code, json, err) = run_cli(&["gb", "compute", "--order", order, "--json"], CYCLIC3_FILE);
        assert_eq!(code, 0, "{err}");
        out.push(json);
    }
    let mut r = rng(11);
    for k in 0..12 {
        let order = &orders()[k % 3];
        let text = problem_file(&random_instance(&mut r), order);
        let (code, json, err) = run_cli(&["gb", "compute", "--json"], &text);
        assert_eq!(code, 0, "{err}");
        out.push(json);
    }
    out
}

/// Ten tampered variants of the lex Cyclic-3 bundle with the expected exit code.
fn tampered_bundles(json: &str) -> Vec<(&'static str, String, i32)> {
    let base: Value = serde_json::from_str(json).unwrap();
    let edit = |f: &dyn Fn(&mut Value)| {
        let mut v = base.clone();
        f(&mut v);
        serde_json::to_string_pretty(&v).unwrap()
    };
    // the first S-pair certificate with a cofactor having at least two terms
    let (pair, pos) = {
        let certs = base["s_pair_certs"].as_array().unwrap();
        certs
            .iter()
            .enumerate()
            .find_map(|(k, c)| {
                c["quotients"].as_array().unwrap().iter().position(|q| q[1].as_array().unwrap().len() >= 2).map(|p| (k, p))
            })
            .expect("a multi-term S-pair cofactor")
    };
    vec![
        (
            "altered S-pair cofactor coefficient",
            edit(&|v| v["s_pair_certs"][pair]["quotients"][pos][1][0][1] = Value::from("7/1")),
            1,
        ),
        ("dropped S-pair cofactor term", edit(&|v| {
            v["s_pair_certs"][pair]["quotients"][pos][1].as_array_mut().unwrap().remove(0);
        }), 1),
        ("altered generator cofactor", edit(&|v| v["generator_certs"][1][0][1][0][1] = Value::from("-3/2")), 1),
        ("altered basis cofactor", edit(&|v| v["basis_certs"][2][0][1][0][1] = Value::from("5/1")), 1),
        ("altered basis element", edit(&|v| v["basis"][1][0][1] = Value::from("2/1")), 1),
        ("missing S-pair", edit(&|v| {
            v["s_pair_certs"].as_array_mut().unwrap().pop();
        }), 2),
        ("S-pair index out of range", edit(&|v| v["s_pair_certs"][0]["j"] = Value::from(9)), 2),
        ("S-pair indices reversed", edit(&|v| {
            let (i, j) = (v["s_pair_certs"][0]["i"].clone(), v["s_pair_certs"][0]["j"].clone());
            v["s_pair_certs"][0]["i"] = j;
            v["s_pair_certs"][0]["j"] = i;
        }), 2),
        ("generator cofactor position out of range", edit(&|v| v["generator_certs"][0][0][0] = Value::from(7)), 2),
        ("basis certificate missing", edit(&|v| {
            v["basis_certs"].as_array_mut().unwrap().pop();
        }), 2),
    ]
}

fn certificate_pipeline() -> Outcome {
    let bundles = self_bundles();
    for (k, b) in bundles.iter().enumerate() {
        let (code, out, _) = run_cli(&["cert", "verify"], b);
        ensure(code == 0, || format!("self-produced bundle {k} rejected with {code}: {out}"))?;
    }
    let tampered = tampered_bundles(&bundles[0]);
    for (name, text, expected) in &tampered {
        let (code, out, _) = run_cli(&["cert", "verify"], text);
        ensure(code == *expected, || format!("{name}: exit {code}, expected {expected} ({out})"))?;
    }
    Ok(format!("{} self-produced bundles accepted; {} tampered bundles rejected with the expected codes", bundles.len(), tampered.len()))
}

fn cancellation() -> Outcome {
    let mut r = rng(12);
    let orders = orders();
    let mut nontrivial = 0;
    for k in 0..150 {
        let order = &orders[k % 3];
        let nvars = r.gen_range(1..=3);
        let d = loop {
            let d = random_exponent(&mut r, nvars, 4);
            if !d.is_zero() {
                break d;
            }
        };
        let s = r.gen_range(1..=5);
        let mut items: Vec<(Coeff, MvPoly)> = Vec::new();
        for _ in 0..s {
            if r.gen_bool(0.1) {
                items.push((coeff(r.gen_range(-3..=3)), MvPoly::zero()));
                continue;
            }
            let lc = loop {
                let c = r.gen_range(-6i64..=6);
                if c != 0 {
                    break c;
                }
            };
            let mut q = MvPoly::monomial(d.clone(), coeff(lc));
            for _ in 0..r.gen_range(0..4) {
                let e = random_exponent(&mut r, nvars, 4);
                if order.compare(&e, &d).is_lt() {
                    q.add_term(e, coeff(r.gen_range(-5..=5)));
                }
            }
            let c = if r.gen_bool(0.1) { Coeff::zero() } else { ratio(r.gen_range(-5..=5), r.gen_range(1..=3)) };
            items.push((c, q));
        }
        // fix the last nonzero item's coefficient so the leading terms cancel
        if let Some(last) = items.iter().rposition(|(_, q)| !q.is_zero()) {
            let partial: Coeff = items
                .iter()
                .enumerate()
                .filter(|&(i, (_, q))| i != last && !q.is_zero())
                .map(|(_, (c, q))| c * q.leading_coeff(order))
                .fold(Coeff::zero(), |a, b| a + b);
            items[last].0 = -partial / items[last].1.leading_coeff(order);
        }
        let direct = items.iter().fold(MvPoly::zero(), |acc, (c, q)| &acc + &q.scale(c));
        let matrix = cancellation_decompose(order, &d, &items).map_err(|e| format!("instance {k}: {e}"))?;
        let polys: Vec<MvPoly> = items.iter().map(|(_, q)| q.clone()).collect();
        let rebuilt = recombine_s_polynomials(order, &polys, &matrix).unwrap();
        ensure(rebuilt == direct, || format!("instance {k}: rebuilt {rebuilt:?}, direct {direct:?}"))?;
        nontrivial += usize::from(matrix.iter().flatten().any(|c| !c.is_zero()));
    }
    Ok(format!("150 instances reconstructed exactly ({nontrivial} with nonzero S-polynomial weights)"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let mut bases = Vec::new();
    let mut results: Vec<(&str, Outcome)> = Vec::new();
    let mut record = |name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let line = match &out {
            Ok(detail) => format!("PASS  {name:<40} {detail} [{:.2?}]", t.elapsed()),
            Err(detail) => format!("FAIL  {name:<40} {detail}"),
        };
        println!("{line}");
        results.push((name, out));
    };

    record("01 cyclic-3 reproduction", &mut cyclic3_reproduction);
    record("02 cyclic-3 S-pair (g1, g2)", &mut cyclic3_s_pair);
    record("03 buchberger criterion", &mut buchberger_criterion);
    record("04 reduced-basis canonicity", &mut || reduced_basis_canonicity(&mut bases));
    let bases_ref = bases.clone();
    record("05 remainder uniqueness over a basis", &mut || remainder_uniqueness(&bases_ref));
    record("06 membership soundness/completeness", &mut || membership(&bases_ref));
    record("07 division postconditions", &mut division_postconditions);
    record("08 degree algebra", &mut degree_algebra);
    record("09 embedding invariance", &mut embedding_invariance);
    record("10 liminf demo", &mut liminf_demo);
    record("11 certificate pipeline", &mut certificate_pipeline);
    record("12 cancellation decomposition", &mut cancellation);

    let failed = results.iter().filter(|(_, r)| r.is_err()).count();
    let total = start.elapsed();
    println!("{} of {} acceptance checks passed in {total:.2?}", results.len() - failed, results.len());
    if total > Duration::from_secs(120) {
        println!("FAIL  total runtime exceeds two minutes");
        return ExitCode::FAILURE;
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
