use std::fmt::Write as _;
use std::io::Write;

use serde_json::{json, Value};

use braidrep_core::braid::{
    burau, chi, tensor, tym_standard, BraidError, BraidRep, Irreducibility, VerifiedRep,
};
use braidrep_core::certify::{chain_profile_with, nonexistence_certificate};
use braidrep_core::field::{parse_field, Field, RatFunc, Rational};
use braidrep_core::friendship::{check_lemma, Analysis, FriendshipGraph, LemmaContext, LemmaId, ALL_LEMMAS};
use braidrep_core::reduction::{best_reduction, reduction_hypotheses, BoundCheck, ReductionError};

use crate::{parse_range, AnalyzeArgs, AnyRep, BuildArgs, CertifyArgs, CliError, Family, RepFile};

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn parse_point(s: &str) -> Result<Rational, CliError> {
    let p = s.strip_prefix("t=").ok_or_else(|| usage(format!("expected t=P, got `{s}`")))?;
    parse_field::<Rational>(p).map_err(usage)
}

fn construct(args: &BuildArgs) -> Result<BraidRep<RatFunc>, CliError> {
    let y = args.y.as_deref().map(parse_field::<RatFunc>).transpose().map_err(usage)?;
    let n = args.n;
    let rep = match args.family {
        Family::Burau => burau(n, false),
        Family::BurauReduced => burau(n, true),
        Family::Tym => tym_standard(n),
        Family::Chi => {
            let y = y.clone().ok_or_else(|| usage("--family chi requires --y"))?;
            return chi(y, n).map_err(usage);
        }
    }
    .map_err(usage)?;
    match y {
        Some(y) => tensor(&chi(y, n).map_err(usage)?, &rep).map_err(usage),
        None => Ok(rep),
    }
}

/// `Q` when no entry depends on `t`.
fn narrow(rep: BraidRep<RatFunc>) -> AnyRep {
    let gens: Option<Vec<_>> =
        rep.generators().iter().map(|m| m.try_map(|x| x.as_constant().ok_or(())).ok()).collect();
    match gens.and_then(|g| BraidRep::new(rep.n(), g).ok()) {
        Some(q) => AnyRep::Q(q),
        None => AnyRep::Qt(rep),
    }
}

fn check_valid<F: Field>(rep: BraidRep<F>) -> Result<VerifiedRep<F>, CliError> {
    rep.verify().map_err(|e| match e {
        BraidError::RelationsFailed(report) => CliError::InvalidRep(report.failures().join("; ")),
        other => CliError::InvalidRep(other.to_string()),
    })
}

pub fn build(args: &BuildArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let rep = construct(args)?;
    let rep = match &args.specialize {
        Some(s) => AnyRep::Q(rep.specialize(&parse_point(s)?).map_err(usage)?),
        None => narrow(rep),
    };
    let (n, r, field) = match &rep {
        AnyRep::Q(q) => (q.n(), q.dim(), check_valid(q.clone()).map(|_| "Q")?),
        AnyRep::Qt(q) => (q.n(), q.dim(), check_valid(q.clone()).map(|_| "Q(t)")?),
    };
    std::fs::write(&args.out, rep.to_file().to_json())?;
    writeln!(out, "wrote {} (n = {n}, dimension = {r}, field = {field})", args.out.display())?;
    Ok(())
}

pub fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.file)
        .map_err(|e| usage(format!("cannot read {}: {e}", args.file.display())))?;
    let lemmas = match args.lemmas.as_deref() {
        None => Vec::new(),
        Some("all") => ALL_LEMMAS.to_vec(),
        Some(list) => {
            list.split(',').map(|s| s.trim().parse::<LemmaId>()).collect::<Result<_, _>>().map_err(usage)?
        }
    };
    match RepFile::from_json(&text)?.to_rep()? {
        AnyRep::Q(rep) => analyze_rep(check_valid(rep)?, args, &lemmas, out),
        AnyRep::Qt(rep) => analyze_rep(check_valid(rep)?, args, &lemmas, out),
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn analyze_rep<F: Field>(
    rep: VerifiedRep<F>,
    args: &AnalyzeArgs,
    lemmas: &[LemmaId],
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let corank = rep.corank().map_err(|e| CliError::InvalidRep(e.to_string()))?;
    let analysis = Analysis::new(&rep);
    let g = analysis.graph();
    writeln!(out, "n = {}, dimension = {}, field = {}", rep.n(), rep.dim(), F::TAG)?;
    writeln!(out, "relations: ok")?;
    writeln!(out, "corank: {corank}")?;
    writeln!(out, "classification: {}", g.classification)?;
    writeln!(out, "f(k), k = 1..n-1: {}", list(&g.f_of_k))?;
    writeln!(out, "tf(k), k = 1..n-1: {}", list(&g.tf_of_k))?;

    if let Some(path) = &args.graph {
        std::fs::write(path, dot(g))?;
    }
    if let Some(path) = &args.json {
        let mut s = serde_json::to_string_pretty(&graph_json(g, corank, rep.dim(), F::TAG.file_name()))
            .expect("plain data");
        s.push('\n');
        std::fs::write(path, s)?;
    }

    let ctx = LemmaContext::new(&rep, &analysis, args.assume_irreducible);
    if !lemmas.is_empty() {
        writeln!(out, "lemmas:")?;
        for &id in lemmas {
            let v = check_lemma(&ctx, id);
            let status = match (v.holds, &v.witness) {
                (Some(true), _) => "holds".to_string(),
                (Some(false), Some(w)) => format!("FAILS ({w})"),
                (Some(false), None) => "FAILS".to_string(),
                (None, _) => format!("not applicable (unmet: {})", v.unmet.join(", ")),
            };
            writeln!(out, "  {:<9} {status}", id.as_str())?;
            if let Some(c) = &v.caveat {
                writeln!(out, "  {:<9} note: {c}", "")?;
            }
        }
    }

    if args.reduce {
        let irr = ctx.irreducibility();
        match best_reduction(&rep) {
            Ok(best) => {
                let bound = match best.bound_check {
                    BoundCheck::Within { bound } => format!("within r-n+2 = {bound}"),
                    BoundCheck::Exceeds { bound } => format!("exceeds r-n+2 = {bound}"),
                    BoundCheck::OutOfRegime => "r <= n, bound not applicable".to_string(),
                };
                writeln!(
                    out,
                    "reduction: y = {}, corank {} -> {}, {bound}",
                    best.y, best.corank_before, best.corank_after
                )?;
            }
            Err(ReductionError::NoCandidates) => {
                writeln!(out, "reduction: C_1 has no eigenvalue in the field")?
            }
            Err(e) => return Err(CliError::InvalidRep(e.to_string())),
        }
        for h in reduction_hypotheses(&rep, irr) {
            writeln!(out, "  hypothesis {}: {}", h.name, if h.holds { "holds" } else { "fails" })?;
        }
        if let Irreducibility::Assumed = irr {
            writeln!(out, "  note: {}", irr.caveat())?;
        }
    }

    if args.chain {
        let p = chain_profile_with(&rep, &analysis);
        let bounds_ii: Vec<String> =
            p.bounds_case_ii.iter().map(|b| b.map_or("-".to_string(), |b| b.to_string())).collect();
        writeln!(out, "chain dim U_k, k = 1..n-1: {}", list(&p.dims))?;
        writeln!(out, "  bound k+3: {}", list(&p.bounds_case_i))?;
        writeln!(out, "  bound k+5: {}", bounds_ii.join(" "))?;
        writeln!(out, "  final dim: {} of {}", p.final_dim, rep.dim())?;
        for (label, hs, ok) in [
            ("rank-3 all-lines", &p.star, p.star_holds()),
            ("rank-3 far-lines", &p.star_star, p.star_star_holds()),
        ] {
            let unmet: Vec<&str> = hs.iter().filter(|h| h.holds != Some(true)).map(|h| h.name).collect();
            if ok {
                writeln!(out, "  {label} hypotheses hold")?;
            } else {
                writeln!(out, "  {label} hypotheses unmet: {}", unmet.join(", "))?;
            }
        }
    }

    let anomalies = g.anomalies();
    if !anomalies.is_empty() {
        return Err(CliError::InvalidRep(format!("friendship table anomalies: {}", anomalies.join("; "))));
    }
    Ok(())
}

/// Undirected DOT: nodes `A0..A(n-1)`, an edge for each `f(i, j) >= 1`.
pub fn dot(g: &FriendshipGraph) -> String {
    let mut s = String::from("graph friendship {\n");
    for i in 0..g.n {
        writeln!(s, "  A{i};").expect("string write");
    }
    for (i, j, f, tf) in g.edges() {
        writeln!(s, "  A{i} -- A{j} [label=\"f={f},tf={tf}\"];").expect("string write");
    }
    s.push_str("}\n");
    s
}

pub fn graph_json(g: &FriendshipGraph, corank: usize, dimension: usize, field: &str) -> Value {
    let edges: Vec<Value> =
        g.edges().into_iter().map(|(i, j, f, tf)| json!({ "i": i, "j": j, "f": f, "tf": tf })).collect();
    json!({
        "n": g.n,
        "dimension": dimension,
        "field": field,
        "corank": corank,
        "classification": g.classification.as_str(),
        "f": g.f,
        "tf": g.tf,
        "f_k": g.f_of_k,
        "tf_k": g.tf_of_k,
        "edges": edges,
        "anomalies": g.anomalies(),
    })
}

pub fn certify(args: &CertifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let range = match (args.n, &args.range) {
        (Some(n), None) => n..=n,
        (None, Some(r)) => parse_range(r)?,
        _ => return Err(usage("give exactly one of --n or --range")),
    };
    if *range.start() < 3 {
        return Err(usage("certificates need n >= 3"));
    }
    for n in range {
        let report = nonexistence_certificate(n);
        if args.jsonl {
            write!(out, "{}", report.to_json_lines())?;
        } else {
            write!(out, "{report}")?;
        }
    }
    Ok(())
}
