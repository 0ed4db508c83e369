use std::fmt::Display;
use std::fs;
use std::io::{Read, Write};
use std::path::Path;

use serde_json::{json, Value};

use super::bundle::{bundle_from_json, bundle_to_json, order_to_json, poly_value};
use super::parse::{HeaderOverrides, ProblemFile};
use super::{CertCommand, Cli, Command, EmbedCommand, GbCommand, LiminfCommand, EXIT_BUDGET, EXIT_FALSE, EXIT_INPUT, EXIT_OK};
use crate::division::divide;
use crate::embedding::{
    check_gb_invariance, check_remainder_invariance, liminf_reduced_gb, rename_all, LiminfVerdict, OrderEmbedding,
    VarInjection,
};
use crate::error::Error;
use crate::groebner::{
    check_buchberger_criterion, member_of_ideal, reduced_groebner, to_dense, CertificateBundle, CertificateError,
    GroebnerBasis,
};
use crate::order::MonomialOrder;
use crate::poly::{s_polynomial, MvPoly};

pub(super) struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Display) -> Self {
        Self { code: EXIT_INPUT, message: message.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::BudgetExceeded { .. }) { EXIT_BUDGET } else { EXIT_INPUT };
        Self { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self::input(e)
    }
}

type Outcome = Result<i32, Failure>;

fn read_source(path: Option<&Path>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p).map_err(|e| Failure::input(format!("{}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// A loaded problem with its order and display names.
struct Problem {
    file: ProblemFile,
    order: MonomialOrder,
}

impl Problem {
    fn show(&self, p: &MvPoly) -> String {
        match self.file.scope.names() {
            Some(names) => p.display_named(&self.order, names).to_string(),
            None => p.display(&self.order).to_string(),
        }
    }

    fn label(entries: &[super::parse::Entry], k: usize, default: &str) -> String {
        entries[k].name.clone().unwrap_or_else(|| format!("{default}{}", k + 1))
    }
}

fn load(cli: &Cli, stdin: &mut dyn Read) -> Result<Problem, Failure> {
    let text = read_source(cli.global.input.as_deref(), stdin)?;
    let overrides = HeaderOverrides {
        order: cli.global.order.map(Into::into),
        vars: cli.global.vars.clone(),
        strict: cli.global.strict,
    };
    let file = ProblemFile::parse(&text, &overrides).map_err(|e| Failure::input(format!("parse error at {e}")))?;
    let order = MonomialOrder::new(file.order, file.precedence.clone());
    Ok(Problem { file, order })
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("plain data"))?;
    Ok(())
}

fn order_value(order: &MonomialOrder) -> Value {
    serde_json::to_value(order_to_json(order).expect("file orders are serializable")).expect("plain data")
}

fn polys_value(order: &MonomialOrder, ps: &[MvPoly]) -> Value {
    Value::Array(ps.iter().map(|p| poly_value(order, p)).collect())
}

pub(super) fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Gb(GbCommand::Compute) => gb_compute(cli, &load(cli, stdin)?, out),
        Command::Gb(GbCommand::Check) => gb_check(cli, &load(cli, stdin)?, out),
        Command::Divide => divide_cmd(cli, &load(cli, stdin)?, out),
        Command::Member { bundle } => member_cmd(cli, &load(cli, stdin)?, bundle.as_deref(), out),
        Command::Spoly => spoly_cmd(cli, &load(cli, stdin)?, out),
        Command::Cert(CertCommand::Verify { path }) => {
            let text = read_source(path.as_deref().or(cli.global.input.as_deref()), stdin)?;
            cert_verify(cli, &text, out)
        }
        Command::Embed(EmbedCommand::Check { shift }) => embed_check(cli, &load(cli, stdin)?, *shift, out),
        Command::Liminf(LiminfCommand::Demo { prefixes }) => liminf_demo(cli, &load(cli, stdin)?, prefixes.as_deref(), out),
    }
}

fn write_bundle(cli: &Cli, bundle: &CertificateBundle) -> Result<String, Failure> {
    let text = bundle_to_json(bundle).map_err(Failure::input)?;
    if let Some(path) = &cli.global.cert_out {
        fs::write(path, &text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn gb_compute(cli: &Cli, pb: &Problem, out: &mut dyn Write) -> Outcome {
    let gens = pb.file.generator_polys();
    let gb = reduced_groebner(&pb.order, &gens, &cli.global.config())?;
    let bundle = CertificateBundle::for_basis(&gb)?;
    let text = write_bundle(cli, &bundle)?;
    if cli.global.json {
        out.write_all(text.as_bytes())?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "reduced Groebner basis ({}, {} elements):", pb.order.kind(), gb.len())?;
    for (k, g) in gb.elements().iter().enumerate() {
        writeln!(out, "  g{} = {}", k + 1, pb.show(g))?;
    }
    if let Some(path) = &cli.global.cert_out {
        writeln!(out, "certificate bundle written to {}", path.display())?;
    }
    Ok(EXIT_OK)
}

fn gb_check(cli: &Cli, pb: &Problem, out: &mut dyn Write) -> Outcome {
    let basis: Vec<MvPoly> = pb.file.generator_polys().into_iter().filter(|p| !p.is_zero()).collect();
    let report = check_buchberger_criterion(&pb.order, &basis)?;
    if cli.global.json {
        let failure = report.failure.as_ref().map(|f| json!({"i": f.i, "j": f.j, "remainder": poly_value(&pb.order, &f.remainder)}));
        emit_json(out, &json!({"holds": report.holds, "pairs_checked": report.certificates.len(), "failure": failure}))?;
    } else if let Some(f) = &report.failure {
        writeln!(out, "not a Groebner basis: S-pair ({}, {}) has remainder {}", f.i, f.j, pb.show(&f.remainder))?;
    } else {
        writeln!(out, "Groebner basis: all {} S-pairs reduce to zero", report.certificates.len())?;
    }
    Ok(if report.holds { EXIT_OK } else { EXIT_FALSE })
}

fn divide_cmd(cli: &Cli, pb: &Problem, out: &mut dyn Write) -> Outcome {
    if pb.file.query.is_empty() {
        return Err(Failure::input("divide needs at least one polynomial in the `query:` section"));
    }
    let divisors = pb.file.generator_polys();
    let mut results = Vec::new();
    for (k, entry) in pb.file.query.iter().enumerate() {
        let res = divide(&pb.order, &entry.poly, &divisors)?;
        if cli.global.json {
            results.push(json!({"quotients": polys_value(&pb.order, &res.quotients), "remainder": poly_value(&pb.order, &res.remainder)}));
        } else {
            writeln!(out, "{}:", Problem::label(&pb.file.query, k, "q"))?;
            for (i, q) in res.quotients.iter().enumerate() {
                writeln!(out, "  quotient {} = {}", i + 1, pb.show(q))?;
            }
            writeln!(out, "  remainder = {}", pb.show(&res.remainder))?;
        }
    }
    if cli.global.json {
        emit_json(out, &Value::Array(results))?;
    }
    Ok(EXIT_OK)
}

fn basis_from_bundle(path: &Path) -> Result<GroebnerBasis, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let bundle = bundle_from_json(&text).map_err(cert_failure)?;
    bundle.verify().map_err(cert_failure)?;
    let cofactors = bundle
        .basis_certs
        .iter()
        .map(|c| to_dense(c, bundle.generators.len()).expect("verified bundle"))
        .collect();
    Ok(GroebnerBasis::from_parts(bundle.order, bundle.basis, bundle.generators, cofactors))
}

fn cert_failure(e: CertificateError) -> Failure {
    let code = match e {
        CertificateError::Malformed(_) => EXIT_INPUT,
        CertificateError::Failed(_) => EXIT_FALSE,
    };
    Failure { code, message: e.to_string() }
}

fn member_cmd(cli: &Cli, pb: &Problem, bundle: Option<&Path>, out: &mut dyn Write) -> Outcome {
    if pb.file.query.is_empty() {
        return Err(Failure::input("member needs at least one polynomial in the `query:` section"));
    }
    let gb = match bundle {
        Some(path) => {
            let gb = basis_from_bundle(path)?;
            if gb.order() != &pb.order {
                return Err(Failure::input(format!(
                    "bundle order {} differs from the requested order {}",
                    gb.order().kind(),
                    pb.order.kind()
                )));
            }
            gb
        }
        None => reduced_groebner(&pb.order, &pb.file.generator_polys(), &cli.global.config())?,
    };
    let mut all = true;
    let mut results = Vec::new();
    for (k, entry) in pb.file.query.iter().enumerate() {
        let (member, cert) = member_of_ideal(&gb, &entry.poly)?;
        all &= member;
        let name = Problem::label(&pb.file.query, k, "q");
        if cli.global.json {
            let q = cert.dense(gb.len())?;
            results.push(json!({
                "name": name,
                "member": member,
                "quotients": polys_value(&pb.order, &q),
                "remainder": poly_value(&pb.order, &cert.remainder),
            }));
        } else if member {
            writeln!(out, "{name}: member")?;
        } else {
            writeln!(out, "{name}: not a member, remainder {}", pb.show(&cert.remainder))?;
        }
    }
    if cli.global.json {
        emit_json(out, &json!({"basis": polys_value(&pb.order, gb.elements()), "results": results}))?;
    }
    Ok(if all { EXIT_OK } else { EXIT_FALSE })
}

fn spoly_cmd(cli: &Cli, pb: &Problem, out: &mut dyn Write) -> Outcome {
    let operands = if pb.file.query.is_empty() { pb.file.generator_polys() } else { pb.file.query_polys() };
    let [f, g] = operands.as_slice() else {
        return Err(Failure::input(format!("spoly needs exactly two polynomials, found {}", operands.len())));
    };
    let s = s_polynomial(&pb.order, f, g)?;
    if cli.global.json {
        emit_json(out, &json!({"s_polynomial": poly_value(&pb.order, &s)}))?;
    } else {
        writeln!(out, "{}", pb.show(&s))?;
    }
    Ok(EXIT_OK)
}

fn cert_verify(cli: &Cli, text: &str, out: &mut dyn Write) -> Outcome {
    let verdict = bundle_from_json(text).and_then(|b| b.verify().map(|()| b));
    let (code, message) = match &verdict {
        Ok(b) => (EXIT_OK, format!("certificate valid: {} basis elements, {} S-pairs", b.basis.len(), b.s_pair_certs.len())),
        Err(e) => (cert_failure(e.clone()).code, e.to_string()),
    };
    if cli.global.json {
        let kind = match &verdict {
            Ok(_) => "valid",
            Err(CertificateError::Malformed(_)) => "malformed",
            Err(CertificateError::Failed(_)) => "failed",
        };
        emit_json(out, &json!({"verdict": kind, "message": message}))?;
    } else {
        writeln!(out, "{message}")?;
    }
    Ok(code)
}

fn embed_check(cli: &Cli, pb: &Problem, shift: u32, out: &mut dyn Write) -> Outcome {
    let emb = OrderEmbedding::of_injective(pb.order.clone(), VarInjection::shift(shift));
    let gens = pb.file.generator_polys();
    let config = cli.global.config();
    let mut checks: Vec<(String, bool)> = Vec::new();

    let source_gb = reduced_groebner(&emb.source, &gens, &config)?;
    let inv = check_gb_invariance(&emb, source_gb.elements(), &gens)?;
    checks.push(("reduced basis passes the criterion in both rings".into(), inv.is_groebner_both_ways()));
    let raw = check_gb_invariance(&emb, &gens.iter().filter(|g| !g.is_zero()).cloned().collect::<Vec<_>>(), &gens)?;
    checks.push(("criterion verdict on the generators agrees".into(), raw.holds()));

    let target_gens = rename_all(&emb.injection, &gens)?;
    let target_gb = reduced_groebner(&emb.target, &target_gens, &config)?;
    let renamed = rename_all(&emb.injection, source_gb.elements())?;
    checks.push(("reduced basis commutes with renaming".into(), renamed == target_gb.elements()));

    let mut polys = gens.clone();
    polys.extend(pb.file.query_polys());
    let section = polys.iter().all(|p| emb.rename(p).map(|q| emb.restrict(&q) == *p).unwrap_or(false));
    checks.push(("restriction after renaming is the identity".into(), section));

    for (k, p) in pb.file.query_polys().iter().enumerate() {
        for (what, basis) in [("generators", &gens[..]), ("reduced basis", source_gb.elements())] {
            let res = divide(&emb.source, p, basis)?;
            let inv = check_remainder_invariance(&emb, p, basis, &res.quotients, &res.remainder)?;
            let label = Problem::label(&pb.file.query, k, "q");
            checks.push((format!("remainder witness for {label} over the {what} transports both ways"), inv.holds()));
        }
    }

    let ok = checks.iter().all(|(_, b)| *b);
    if cli.global.json {
        let items: Vec<Value> = checks.iter().map(|(n, b)| json!({"check": n, "holds": b})).collect();
        emit_json(out, &json!({"shift": shift, "holds": ok, "checks": items}))?;
    } else {
        writeln!(out, "embedding x_i -> x_(i+{shift}):")?;
        for (name, holds) in &checks {
            writeln!(out, "  [{}] {name}", if *holds { "ok" } else { "FAIL" })?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}

fn liminf_demo(cli: &Cli, pb: &Problem, prefixes: Option<&[usize]>, out: &mut dyn Write) -> Outcome {
    let gens = pb.file.generator_polys();
    let default: Vec<usize>;
    let prefixes = match prefixes {
        Some(p) => p,
        None => {
            let v = gens.iter().flat_map(|g| g.vars()).map(|w| w.0 as usize + 1).max().unwrap_or(0);
            default = (1..=v + 2).collect();
            &default
        }
    };
    let rep = liminf_reduced_gb(&pb.order, &gens, prefixes, &cli.global.config())?;
    let verdict = match rep.verdict {
        LiminfVerdict::Holds => "holds",
        LiminfVerdict::Fails => "fails",
        LiminfVerdict::Inconclusive => "inconclusive",
    };
    if cli.global.json {
        let per: Vec<Value> = rep.per_prefix.iter().map(|(n, g)| json!({"n": n, "basis": polys_value(&pb.order, g)})).collect();
        emit_json(
            out,
            &json!({
                "order": order_value(&pb.order),
                "num_vars": rep.num_vars,
                "per_prefix": per,
                "liminf": polys_value(&pb.order, &rep.liminf),
                "stabilized_at": rep.stabilized_at,
                "direct": polys_value(&pb.order, &rep.direct),
                "cross_checked": rep.cross_checked,
                "verdict": verdict,
            }),
        )?;
    } else {
        let list = |ps: &[MvPoly]| -> String {
            if ps.is_empty() {
                "{}".into()
            } else {
                format!("{{{}}}", ps.iter().map(|p| pb.show(p)).collect::<Vec<_>>().join(", "))
            }
        };
        for (n, g) in &rep.per_prefix {
            writeln!(out, "G_{n} = {}", list(g))?;
        }
        writeln!(out, "liminf = {}", list(&rep.liminf))?;
        match rep.stabilized_at {
            Some(n) => writeln!(out, "stabilized at n = {n}")?,
            None => writeln!(out, "no stabilization within the given prefixes")?,
        }
        writeln!(out, "membership cross-check: {}", if rep.cross_checked { "ok" } else { "FAILED" })?;
        writeln!(out, "verdict: {verdict}")?;
    }
    Ok(match rep.verdict {
        LiminfVerdict::Holds if rep.cross_checked => EXIT_OK,
        _ => EXIT_FALSE,
    })
}
