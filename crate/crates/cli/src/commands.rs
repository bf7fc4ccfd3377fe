use std::sync::Arc;

use anyhow::{Context, Result};
use lindef_core::certify::{bundled_witness, verify_any, AnyWitness, CertifyOptions};
use lindef_core::constructions::{br_obstruction, AlgebraSpec, HPolynomial};
use lindef_core::galgebra::{ideal_from_strs, Algebra};
use lindef_core::resolution::{linear_part_homology, resolve as resolve_module, GradedModule, ResolveOptions};
use lindef_core::search::{search_witness, SearchJob, SearchMode};
use lindef_core::Rationals;
use serde_json::json;

use crate::args::{read, AlgebraArgs, CertifyArgs, Cli, ColonArgs, ModeArg, ModuleArgs, ModuleKind, ObstructionArgs, SearchArgs};
use crate::output::{Outcome, Run};
use crate::UsageError;

fn build_algebra(spec: &AlgebraSpec) -> Result<Arc<Algebra<Rationals>>> {
    Ok(Arc::new(spec.build().with_context(|| format!("building {}", spec.describe()))?))
}

fn join(v: &[usize]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

pub fn build(cli: &Cli, a: &AlgebraArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "build");
    let spec = a.spec()?;
    let alg = build_algebra(&spec)?;
    let mut text = format!("{}\n", spec.describe());
    text.push_str(&format!("variables ({}): {}\n", alg.num_vars(), alg.var_names().join(" ")));
    text.push_str(&format!("hilbert: {}\n", join(alg.dims())));
    text.push_str(&format!("{}\n", if alg.is_artinian() { "artinian".to_string() } else { format!("truncated at degree {}", alg.top()) }));
    if let Some(h) = spec.closed_form_h() {
        text.push_str(&format!("closed-form h-polynomial: {}\n", h.display()));
    }
    let result = json!({
        "spec": spec,
        "variables": alg.var_names(),
        "hilbert": alg.dims(),
        "artinian": alg.is_artinian(),
        "closed_form_h": spec.closed_form_h().map(|h| h.coeffs),
    });
    run.spec = Some(spec);
    run.finish(result, &text)?;
    Ok(Outcome::Success)
}

pub fn hilbert(cli: &Cli, a: &AlgebraArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "hilbert");
    let spec = a.spec()?;
    let alg = build_algebra(&spec)?;
    let mut text = join(alg.dims());
    if !alg.is_artinian() {
        text.push_str(&format!(" (truncated at degree {})", alg.top()));
    }
    let result = json!({ "hilbert": alg.dims(), "artinian": alg.is_artinian() });
    run.spec = Some(spec);
    run.finish(result, &text)?;
    Ok(Outcome::Success)
}

pub fn obstruction(cli: &Cli, a: &ObstructionArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "obstruction");
    let spec = a.algebra.spec()?;
    let alg = build_algebra(&spec)?;
    if !alg.is_artinian() {
        return Err(UsageError("the obstruction needs an artinian ring".into()).into());
    }
    let h = HPolynomial::from_dims(alg.dims());
    let rep = br_obstruction(&h, alg.num_vars(), a.window, a.complete_intersection);
    let verdict = serde_json::to_value(&rep.verdict)?.as_str().unwrap_or_default().to_string();
    let text = format!(
        "h = {}\nh(-1) = {}\nh = (1+t)^{} g, g(-1) = {}\nfirst negative coefficient: {}\nverdict: {verdict}\n",
        h.display(),
        rep.h_at_minus_one,
        rep.s,
        rep.g_at_minus_one,
        rep.first_negative_index.map_or("none in window".to_string(), |i| format!("t^{i}")),
    );
    run.verdicts.push(verdict);
    run.spec = Some(spec);
    run.finish(serde_json::to_value(&rep)?, &text)?;
    Ok(Outcome::Success)
}

pub fn colon(cli: &Cli, a: &ColonArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "colon");
    let spec = a.algebra.spec()?;
    let alg = build_algebra(&spec)?;
    let gens: Vec<&str> = a.ideal.iter().map(|s| s.trim()).collect();
    let i = ideal_from_strs(&alg, &gens)?;
    let f = alg.parse(&a.by)?;
    let c = i.colon(&f)?;
    let gens: Vec<String> = c.min_gen_elements().iter().map(|g| alg.format(g)).collect();
    let text = format!("({}) : ({}) = ({})\nminimal generators (degree, count): {:?}\n", a.ideal.join(", "), a.by, gens.join(", "), c.min_gens());
    let result = json!({ "generators": gens, "min_gens": c.min_gens(), "dims": c.dims() });
    run.spec = Some(spec);
    run.finish(result, &text)?;
    Ok(Outcome::Success)
}

fn module(alg: &Arc<Algebra<Rationals>>, a: &ModuleArgs) -> Result<(GradedModule<Rationals>, String)> {
    let kind = a.module.unwrap_or(if a.ideal.is_empty() { ModuleKind::Residue } else { ModuleKind::Ideal });
    let gens: Vec<&str> = a.ideal.iter().map(|s| s.trim()).collect();
    Ok(match kind {
        ModuleKind::Residue => (GradedModule::residue_field(alg), "k".into()),
        ModuleKind::Ideal => (GradedModule::ideal(ideal_from_strs(alg, &gens)?), format!("({})", a.ideal.join(", "))),
        ModuleKind::Quotient => {
            (GradedModule::cyclic_quotient(ideal_from_strs(alg, &gens)?), format!("R/({})", a.ideal.join(", ")))
        }
    })
}

pub fn resolve(cli: &Cli, a: &ModuleArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "resolve");
    let spec = a.algebra.spec()?;
    let alg = build_algebra(&spec)?;
    let (m, name) = module(&alg, a)?;
    let opts = ResolveOptions { max_rank: a.max_rank, ..ResolveOptions::default() };
    let cutoff = a.cutoff.unwrap_or(3);
    let r = resolve_module(&m, cutoff, &opts)?;
    let b = r.betti();
    let text = format!(
        "resolution of {name} over {} through F_{cutoff}\n{b}totals: {}\nrank-nullity check: {}\n",
        spec.describe(),
        join(&b.totals()),
        if r.euler_ok { "ok" } else { "FAILED" }
    );
    let result = json!({ "module": name, "betti": b.to_json(), "totals": b.totals(), "euler_ok": r.euler_ok });
    run.spec = Some(spec);
    run.finish(result, &text)?;
    Ok(Outcome::from_ok(r.euler_ok))
}

pub fn linpart(cli: &Cli, a: &ModuleArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "linpart");
    let spec = a.algebra.spec()?;
    let alg = build_algebra(&spec)?;
    let (m, name) = module(&alg, a)?;
    let opts = ResolveOptions { max_rank: a.max_rank, ..ResolveOptions::default() };
    let cutoff = a.cutoff.unwrap_or(4);
    let rep = linear_part_homology(&m, cutoff, &opts)?;
    let text = format!(
        "linear part of the resolution of {name} over {}\ndim H_i for i = 1..{cutoff}: {}\nmethod: {:?}\nlinearity defect at least {}\n",
        spec.describe(),
        join(&rep.homology_dims[1..]),
        rep.method,
        rep.lind_lower_bound
    );
    run.spec = Some(spec);
    run.finish(serde_json::to_value(&rep)?, &text)?;
    Ok(Outcome::Success)
}

pub fn load_witness(path: &std::path::Path) -> Result<AnyWitness> {
    let text = read(path)?;
    AnyWitness::from_json(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())).into())
}

pub fn certify(cli: &Cli, a: &CertifyArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "certify");
    let mut w = match (&a.witness, &a.algebra.builtin) {
        (Some(p), _) => load_witness(p)?,
        (None, Some(b)) => AnyWitness::from_json(
            bundled_witness(b).ok_or_else(|| UsageError(format!("no bundled witness for `{b}`")))?,
        )?,
        (None, None) => return Err(UsageError("--witness FILE is required".into()).into()),
    };
    if a.algebra.is_given() {
        let mut spec = a.algebra.spec()?;
        let own = w.algebra().clone();
        if spec.quotient_linear.is_empty() {
            spec.quotient_linear = own.quotient_linear.clone();
        }
        match &mut w {
            AnyWitness::Matrix(m) => m.algebra = spec,
            AnyWitness::Scalar(s) => s.algebra = spec,
        }
    }
    let opts = CertifyOptions {
        numeric_cutoff: (a.cutoff > 0).then_some(a.cutoff),
        linpart_cutoff: a.linpart,
        spot_checks: a.spot_checks,
        seed: a.seed,
        ..CertifyOptions::default()
    };
    let report = verify_any(&w, &opts)?;
    run.spec = Some(w.algebra().clone());
    run.verdicts.push(serde_json::to_value(report.verdict)?.as_str().unwrap_or_default().to_string());
    let ok = report.verdict.is_certified();
    run.finish(serde_json::to_value(&report)?, &report.to_text())?;
    Ok(Outcome::from_ok(ok))
}

pub fn search(cli: &Cli, a: &SearchArgs) -> Result<Outcome> {
    let mut run = Run::new(cli, "search");
    let mut job = if let Some(p) = &a.config {
        SearchJob::from_json(&read(p)?).map_err(|e| UsageError(format!("{}: {e}", p.display())))?
    } else if let Some(p) = &a.witness {
        let w = load_witness(p)?;
        let certs = match &w {
            AnyWitness::Scalar(s) => s.certs.clone(),
            AnyWitness::Matrix(m) => m.certs.clone(),
        };
        let mut ring = lindef_core::certify::WitnessCerts::default();
        ring.filtration = certs.filtration;
        ring.strongly_koszul = certs.strongly_koszul;
        SearchJob { algebra: w.algebra().clone(), certs: ring, config: Default::default() }
    } else {
        SearchJob { algebra: a.algebra.spec()?, certs: Default::default(), config: Default::default() }
    };
    if (a.config.is_some() || a.witness.is_some()) && a.algebra.is_given() {
        job.algebra = a.algebra.spec()?;
    }
    let c = &mut job.config;
    if let Some(p) = &a.pool {
        c.coefficient_pool = p.clone();
    }
    if let Some(x) = a.max_support {
        c.max_support = x;
    }
    if let Some(m) = a.mode {
        c.mode = match m {
            ModeArg::ExhaustiveSparse => SearchMode::ExhaustiveSparse,
            ModeArg::Randomized => SearchMode::Randomized,
        };
    }
    if let Some(x) = a.max_candidates {
        c.max_candidates = x;
    }
    if a.max_seconds.is_some() {
        c.max_seconds = a.max_seconds;
    }
    if a.max_witnesses.is_some() {
        c.max_witnesses = a.max_witnesses;
    }
    if a.mod_p.is_some() {
        c.prefilter_prime = a.mod_p;
        run.arithmetic = format!("rational, prefilter mod {}", a.mod_p.unwrap_or_default());
    }
    if let Some(s) = a.seed {
        c.seed = s;
    }
    let outcome = search_witness(&job, &mut |msg| eprintln!("search: {msg}"))?;
    let mut text = format!(
        "search over {}: {} forms, {} zero-divisor pairs, {} verified candidates, {} certified ({:.1}s)\n",
        job.algebra.describe(),
        outcome.forms_examined,
        outcome.pairs_found,
        outcome.candidates.len(),
        outcome.witnesses.len(),
        outcome.seconds
    );
    if let Some(s) = &outcome.stopped_by {
        text.push_str(&format!("stopped by {s}\n"));
    } else if outcome.exhausted {
        text.push_str("search space exhausted\n");
    }
    for w in &outcome.witnesses {
        text.push_str(&format!("  l1 = {}, l2 = {}, K1 = ({}), K2 = ({})\n", w.l1, w.l2, w.k1.join(", "), w.k2.join(", ")));
    }
    // `--out witnesses.json` names the witness file directly
    if let Some(p) = cli.out.as_ref().filter(|p| p.extension().is_some_and(|e| e == "json")) {
        std::fs::write(p, serde_json::to_string_pretty(&outcome.witnesses)? + "\n")
            .with_context(|| format!("writing {}", p.display()))?;
        text.push_str(&format!("witnesses written to {}\n", p.display()));
    }
    run.verdicts = outcome.reports.iter().map(|r| serde_json::to_value(r.verdict).unwrap().as_str().unwrap_or_default().to_string()).collect();
    run.spec = Some(job.algebra.clone());
    let found = !outcome.witnesses.is_empty();
    let result = json!({ "job": job, "outcome": outcome });
    if cli.out.as_ref().is_some_and(|p| p.extension().is_some_and(|e| e == "json")) {
        // the witness file is the report
        run.write_files = false;
    }
    run.finish(result, &text)?;
    Ok(Outcome::from_ok(found))
}
