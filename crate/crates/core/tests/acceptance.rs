//! One line per acceptance criterion; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use lindef_core::certify::{
    bundled_witness, verify_any, verify_koszul_filtration, verify_witness, AnyWitness, CertifyOptions, Status, Verdict, Witness,
    BUNDLED,
};
use lindef_core::constructions::{
    br_obstruction, build_presentation_strs, h_poly_segre, h_poly_veronese, segre_artinian, veronese_artinian, AlgebraSpec,
    HPolynomial, ObstructionVerdict,
};
use lindef_core::resolution::{linear_part_homology, summand_betti_check};
use lindef_core::{ideal, ideal_from_strs, maximal_ideal, resolve, GradedModule, ResolveOptions};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

const SIX: [&str; 6] = ["v72", "v53", "v54", "v45", "s45", "s36"];

/// Published Hilbert functions of `U` and `W`.
fn table(case: &str) -> (&'static [usize], &'static [usize]) {
    match case {
        "s36" => (&[1, 10, 10], &[1, 10, 10]),
        "s45" => (&[1, 12, 18, 4], &[1, 11, 12, 1]),
        "v72" => (&[1, 21, 35, 7], &[1, 20, 25, 2]),
        "v53" => (&[1, 30, 45, 5], &[1, 29, 32, 1]),
        "v54" => (&[1, 65, 155, 35], &[1, 59, 63, 1]),
        "v45" => (&[1, 52, 68, 4], &[1, 51, 52, 1]),
        _ => unreachable!(),
    }
}

fn witness_spec(case: &str) -> AlgebraSpec {
    AnyWitness::from_json(bundled_witness(case).unwrap()).unwrap().algebra().clone()
}

fn base(spec: &AlgebraSpec) -> AlgebraSpec {
    AlgebraSpec { base: spec.base.clone(), quotient_linear: Vec::new() }
}

fn criterion1() -> Outcome {
    let mut slowest = 0f64;
    for case in SIX {
        let t = Instant::now();
        let spec = witness_spec(case);
        let u = e(base(&spec).build())?;
        let w = e(spec.build())?;
        let (eu, ew) = table(case);
        ensure(u.dims() == eu, format!("{case}: U = {:?}, expected {eu:?}", u.dims()))?;
        ensure(w.dims() == ew, format!("{case}: W = {:?}, expected {ew:?}", w.dims()))?;
        slowest = slowest.max(t.elapsed().as_secs_f64());
        ensure(slowest < 600.0, format!("{case} took {slowest:.0}s"))?;
    }
    Ok(format!("6 cases, U and W exact, slowest {slowest:.2}s"))
}

fn criterion2() -> Outcome {
    let closed = [
        ("s36", h_poly_segre(3, 6)),
        ("s45", h_poly_segre(4, 5)),
        ("v72", h_poly_veronese(7, 2)),
        ("v53", h_poly_veronese(5, 3)),
        ("v54", h_poly_veronese(5, 4)),
        ("v45", h_poly_veronese(4, 5)),
    ];
    for (case, h) in &closed {
        let u = e(base(&witness_spec(case)).build())?;
        ensure(&HPolynomial::from_dims(u.dims()) == h, format!("{case}: closed form differs"))?;
    }
    let mut count = 0;
    for n in 1..=5 {
        for c in 2..=5 {
            let a = e(veronese_artinian(n, c))?;
            ensure(HPolynomial::from_dims(a.dims()) == h_poly_veronese(n, c), format!("V({n},{c})"))?;
            count += 1;
        }
    }
    for m in 1..=6usize {
        for n in m..=6usize {
            // anti-diagonal sums form a regular sequence of linear forms
            let j: Vec<String> = (2..=m + n)
                .map(|s| {
                    let terms: Vec<String> =
                        (1..=m).filter(|&i| s > i && s - i <= n).map(|i| format!("z{}{}", i, s - i)).collect();
                    terms.join("-")
                })
                .collect();
            let a = e(segre_artinian(m, n, &j, m + 1))?;
            ensure(HPolynomial::from_dims(a.dims()) == h_poly_segre(m, n), format!("S({m},{n})"))?;
            count += 1;
        }
    }
    Ok(format!("6 named cases and {count} Segre/Veronese instances"))
}

fn criterion3() -> Outcome {
    let opts = CertifyOptions::default();
    let mut parts = Vec::new();
    for case in ["s36", "s45", "roos", "v72", "v53", "v54", "v45"] {
        let w = e(Witness::from_json(bundled_witness(case).unwrap()))?;
        let t = Instant::now();
        let r = e(verify_witness(&w, &opts))?;
        ensure(
            r.verdict == Verdict::CertifiedNotAbsolutelyKoszul,
            format!("{case}: {:?} at {:?}", r.verdict, r.first_failure().map(|c| c.id.clone())),
        )?;
        parts.push(format!("{case} {:.1}s", t.elapsed().as_secs_f64()));
    }
    Ok(format!("literal witnesses certify ({})", parts.join(", ")))
}

fn criterion4() -> Outcome {
    let mut out = Vec::new();
    for (case, mutate) in [("s45", ("I4", "I14")), ("conca", ("(z)", "(x,z)"))] {
        let w = e(AnyWitness::from_json(bundled_witness(case).unwrap()))?;
        let cert = match &w {
            AnyWitness::Scalar(s) => s.certs.filtration.clone(),
            AnyWitness::Matrix(m) => m.certs.filtration.clone(),
        }
        .ok_or(format!("{case}: no filtration"))?;
        let u = Arc::new(e(base(w.algebra()).build())?);
        let good = verify_koszul_filtration(&u, &cert, "");
        let steps: Vec<_> = good.checks.iter().filter(|c| c.id.contains("step")).collect();
        ensure(good.ok && steps.iter().all(|c| c.status == Status::Pass), format!("{case}: filtration fails"))?;
        ensure(steps.len() == cert.steps.len(), format!("{case}: {} step checks for {} steps", steps.len(), cert.steps.len()))?;
        let mut bad = cert.clone();
        let step = bad.steps.iter_mut().find(|s| s.ideal == mutate.0).unwrap();
        step.colon = mutate.1.into();
        let caught = verify_koszul_filtration(&u, &bad, "");
        let failing: Vec<_> =
            caught.checks.iter().filter(|c| c.status == Status::Fail && c.id.contains("step")).map(|c| c.id.clone()).collect();
        ensure(!caught.ok && failing.len() == 1, format!("{case}: mutation gives {failing:?}"))?;
        out.push(format!("{case} {} identities, mutation caught at {}", steps.len(), failing[0]));
    }
    Ok(out.join("; "))
}

fn criterion5() -> Outcome {
    let opts = CertifyOptions { numeric_cutoff: Some(3), numeric_resolve: ResolveOptions::default(), ..Default::default() };
    for case in ["roos", "s36"] {
        let r = e(verify_witness(&Witness::from_json(bundled_witness(case).unwrap()).unwrap(), &opts))?;
        let v: Vec<_> = r.checks.iter().filter(|c| c.id.starts_with("(v)")).collect();
        ensure(v.len() == 2, format!("{case}: {} splitting checks", v.len()))?;
        for c in v {
            ensure(
                c.status == Status::Pass && c.evidence.contains("numeric through i=3"),
                format!("{case}: {}", c.evidence),
            )?;
        }
    }
    let a = Arc::new(e(AlgebraSpec::builtin("conca").build())?);
    let u = e(ideal_from_strs(&a, &["y", "x-u", "z^2"]))?;
    let y = e(ideal_from_strs(&a, &["y"]))?;
    let rows = e(summand_betti_check(&u, &y, 1, &ResolveOptions::default()))?;
    let r = &rows[1];
    ensure((r.beta_u, r.beta_sub, r.beta_quotient, r.holds) == (7, 3, 5, false), format!("conca: {r:?}"))?;
    Ok("roos and s36 split through i=3; conca beta_1 = 7 vs 3 + 5".into())
}

fn criterion6() -> Outcome {
    let opts = ResolveOptions::default();
    let mut euler = Vec::new();
    let roos = Arc::new(e(AlgebraSpec::builtin("roos").build())?);
    let r = e(resolve(&GradedModule::residue_field(&roos), 3, &opts))?;
    // 1/(1 - 4t + 4t^2)
    let mut series = vec![1i64, 4];
    for n in 2..4 {
        series.push(4 * series[n - 1] - 4 * series[n - 2]);
    }
    let got: Vec<i64> = r.betti().totals().iter().map(|&x| x as i64).collect();
    ensure(got == series, format!("roos: {got:?} vs {series:?}"))?;
    euler.push(r.euler_ok);
    let dual = Arc::new(e(build_presentation_strs(&["x".to_string()], &["x^2".to_string()], 3))?);
    let r = e(resolve(&GradedModule::residue_field(&dual), 8, &opts))?;
    ensure(r.betti().totals() == vec![1; 9], format!("k[x]/(x^2): {:?}", r.betti().totals()))?;
    euler.push(r.euler_ok);
    // the rest of the suite
    for case in ["roos", "s36", "s45"] {
        let w = Witness::from_json(bundled_witness(case).unwrap()).unwrap();
        let a = Arc::new(e(w.algebra.build())?);
        let l1 = e(ideal_from_strs(&a, &[w.l1.as_str()]))?;
        euler.push(e(resolve(&GradedModule::ideal(l1.clone()), 3, &opts))?.euler_ok);
        euler.push(e(resolve(&GradedModule::cyclic_quotient(l1), 3, &opts))?.euler_ok);
        euler.push(e(resolve(&GradedModule::residue_field(&a), 3, &opts))?.euler_ok);
        euler.push(e(resolve(&GradedModule::ideal(maximal_ideal(&a)), 2, &opts))?.euler_ok);
    }
    ensure(euler.iter().all(|&b| b), "Euler identity failed")?;
    Ok(format!("roos 1,4,12,32; k[x]/(x^2) all 1 through i=8; Euler identity on {} modules", euler.len()))
}

fn criterion7() -> Outcome {
    let opts = ResolveOptions::default();
    let mut parts = Vec::new();
    for (case, json) in BUNDLED {
        let w = e(AnyWitness::from_json(json))?;
        let r = e(verify_any(&w, &CertifyOptions { numeric_cutoff: None, ..Default::default() }))?;
        if !r.verdict.is_certified() {
            continue;
        }
        let a = Arc::new(e(w.algebra().build())?);
        let module = match &w {
            AnyWitness::Scalar(s) => GradedModule::ideal(e(ideal_from_strs(&a, &[s.l1.as_str()]))?),
            AnyWitness::Matrix(m) => e(GradedModule::image(&a, &e(m.phi1.build(a.as_ref()))?))?,
        };
        let rep = e(linear_part_homology(&module, 4, &opts))?;
        ensure(rep.nonzero_through(4), format!("{case}: H = {:?}", rep.homology_dims))?;
        parts.push(format!("{case} {:?}", &rep.homology_dims[1..]));
    }
    let dual = Arc::new(e(build_presentation_strs(&["x".to_string()], &["x^2".to_string()], 3))?);
    let x = dual.var(0);
    let rep = e(linear_part_homology(&GradedModule::ideal(e(ideal(&dual, &[x]))?), 6, &opts))?;
    ensure(rep.homology_dims[1..=6].iter().all(|&d| d == 0), format!("control: {:?}", rep.homology_dims))?;
    Ok(format!("{}; control zero through 6", parts.join(", ")))
}

fn criterion8() -> Outcome {
    let mut vals = Vec::new();
    for case in SIX {
        let w = e(witness_spec(case).build())?;
        // oracle: the listed series of W at t = -1
        let listed = table(case).1;
        let oracle: i64 = listed.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        let rep = br_obstruction(&HPolynomial::from_dims(w.dims()), w.num_vars(), 20, false);
        ensure(rep.h_at_minus_one == oracle, format!("{case}: h(-1) = {} vs {oracle}", rep.h_at_minus_one))?;
        ensure(
            rep.verdict == ObstructionVerdict::BrObstructed && rep.g_at_minus_one > 0,
            format!("{case}: {:?}, g(-1) = {}", rep.verdict, rep.g_at_minus_one),
        )?;
        vals.push(rep.h_at_minus_one.to_string());
    }
    ensure(vals == ["4", "3", "4", "1", "1", "1"], format!("{vals:?}"))?;
    Ok(format!("h(-1) = {} for V(7,2), V(5,3), V(5,4), V(4,5), S(4,5), S(3,6); all BR-obstructed", vals.join(", ")))
}

fn criterion9() -> Outcome {
    for (name, run) in common::PROPERTIES {
        run(common::CASES).map_err(|m| format!("{name}: {m}"))?;
    }
    Ok(format!("{} properties x {} seeded instances, 0 failures", common::PROPERTIES.len(), common::CASES))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 9] = [
        (1, "Hilbert functions", criterion1),
        (2, "h-polynomial closed forms", criterion2),
        (3, "witness certification", criterion3),
        (4, "Koszul filtrations", criterion4),
        (5, "Betti splittings", criterion5),
        (6, "resolution engine", criterion6),
        (7, "linear-part corroboration", criterion7),
        (8, "Backelin-Roos obstruction", criterion8),
        (9, "property suites", criterion9),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let t = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("criterion {n} PASS {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n} FAIL {name}: {msg} [{secs:.1}s]");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
