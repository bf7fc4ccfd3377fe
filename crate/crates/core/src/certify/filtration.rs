//! Koszul filtrations: families of linear ideals closed under the colon steps
//! `J : x` with `I = J + (x)`. Every member has a linear resolution.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::context::named_ideal;
use super::report::{Check, Status};
use crate::error::Result;
use crate::exactla::Field;
use crate::galgebra::{ideal, maximal_ideal, Algebra, GradedIdeal};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedIdeal {
    pub name: String,
    pub gens: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationStep {
    pub ideal: String,
    pub base: String,
    pub element: String,
    pub colon: String,
}

/// Members other than `0` and `m` (both implicit) plus one step per nonzero member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationCert {
    pub ideals: Vec<NamedIdeal>,
    pub steps: Vec<FiltrationStep>,
}

pub struct FiltrationOutcome<K: Field> {
    pub checks: Vec<Check>,
    pub ok: bool,
    /// Named members, `m` included, when `ok`.
    pub members: Vec<(String, GradedIdeal<K>)>,
}

fn parse_linear<K: Field>(alg: &Algebra<K>, s: &str) -> std::result::Result<crate::galgebra::Element<K::Elem>, String> {
    let e = alg.parse(s).map_err(|e| e.to_string())?;
    if e.degree != 1 {
        return Err(format!("`{s}` has degree {} (expected a linear form)", e.degree));
    }
    Ok(e)
}

/// Verifies every colon step of `cert` in `alg`. Steps whose ideal vanishes in
/// `alg` are skipped, so a filtration of `U` can be checked directly in a
/// quotient `U/I` when `I` is one of its members.
pub fn verify_koszul_filtration<K: Field>(
    alg: &Arc<Algebra<K>>,
    cert: &FiltrationCert,
    prefix: &str,
) -> FiltrationOutcome<K> {
    let mut checks = Vec::new();
    let fail = |checks: Vec<Check>| FiltrationOutcome { checks, ok: false, members: Vec::new() };

    let mut members: Vec<(String, GradedIdeal<K>)> = Vec::new();
    let mut problems = Vec::new();
    for m in &cert.ideals {
        let gens: std::result::Result<Vec<_>, String> = m.gens.iter().map(|g| parse_linear(alg, g)).collect();
        match gens.and_then(|g| ideal(alg, &g).map_err(|e| e.to_string())) {
            Ok(i) => members.push((m.name.clone(), i)),
            Err(e) => problems.push(format!("{}: {e}", m.name)),
        }
    }
    let max = maximal_ideal(alg);
    match members.iter().find(|(n, _)| n == "m") {
        Some((_, i)) if !i.equals(&max).unwrap_or(false) => problems.push("member `m` is not the maximal ideal".into()),
        Some(_) => {}
        None => members.push(("m".into(), max.clone())),
    }
    let nonzero = members.iter().filter(|(_, i)| !i.is_zero()).count();
    checks.push(Check::new(
        format!("{prefix}members"),
        "filtration members are generated by linear forms; (0) and m included",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} members, {nonzero} nonzero in this ring", members.len())
        } else {
            problems.join("\n")
        },
    ));
    if !problems.is_empty() {
        return fail(checks);
    }

    let lookup = |name: &str| members.iter().find(|(n, _)| n == name).map(|(_, i)| i.clone());
    let mut covered: Vec<String> = Vec::new();
    let mut all_ok = true;
    for s in &cert.steps {
        let id = format!("{prefix}step {}:{}", s.base, s.ideal);
        let desc = format!("{}:{} = {}", s.base, s.ideal, s.colon);
        let outcome = (|| -> Result<(Status, String)> {
            let i = named_ideal(alg, &s.ideal, lookup)?;
            if i.is_zero() {
                return Ok((Status::NotApplicable, format!("{} vanishes in this ring", s.ideal)));
            }
            let j = named_ideal(alg, &s.base, lookup)?;
            let x = match parse_linear(alg, &s.element) {
                Ok(x) => x,
                Err(e) => return Ok((Status::Fail, e)),
            };
            if !i.contains_submodule(&j)? || j.equals(&i)? {
                return Ok((Status::Fail, format!("{} is not properly contained in {}", s.base, s.ideal)));
            }
            if !j.sum(&ideal(alg, &[x.clone()])?)?.equals(&i)? {
                return Ok((Status::Fail, format!("{} + ({}) differs from {}", s.base, s.element, s.ideal)));
            }
            let claimed = named_ideal(alg, &s.colon, lookup)?;
            let colon = j.colon(&x)?;
            if !colon.equals(&claimed)? {
                return Ok((
                    Status::Fail,
                    format!(
                        "computed {}:({}) has dims {:?}, claimed {} has dims {:?}",
                        s.base,
                        s.element,
                        colon.dims(),
                        s.colon,
                        claimed.dims()
                    ),
                ));
            }
            Ok((Status::Pass, format!("{} = {} + ({}); colon dims {:?}", s.ideal, s.base, s.element, colon.dims())))
        })();
        let (status, evidence) = outcome.unwrap_or_else(|e| (Status::Fail, e.to_string()));
        match status {
            Status::Pass => covered.push(s.ideal.clone()),
            Status::Fail => all_ok = false,
            _ => {}
        }
        checks.push(Check::with_status(id, desc, status, evidence));
    }
    let missing: Vec<&str> = members
        .iter()
        .filter(|(n, i)| !i.is_zero() && !covered.contains(n))
        .map(|(n, _)| n.as_str())
        .collect();
    checks.push(Check::new(
        format!("{prefix}coverage"),
        "every nonzero member has a verified colon step",
        missing.is_empty(),
        if missing.is_empty() { String::new() } else { format!("no verified step for: {}", missing.join(", ")) },
    ));
    let ok = all_ok && missing.is_empty();
    FiltrationOutcome { checks, ok, members: if ok { members } else { Vec::new() } }
}
