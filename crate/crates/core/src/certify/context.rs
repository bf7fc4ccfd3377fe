//! What is known about Koszulness in one ring: verified filtration members and
//! trusted strong Koszulness.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::galgebra::{ideal_from_strs, Element, maximal_ideal, Algebra, FreeModule, GradedIdeal, Submodule};

/// An ideal given either by the name of a filtration member (`"m"` and `"0"`
/// are always available) or by generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    Named(String),
    Gens(Vec<String>),
}

impl IdealSpec {
    pub fn describe(&self) -> String {
        match self {
            IdealSpec::Named(n) => n.clone(),
            IdealSpec::Gens(g) => format!("({})", g.join(", ")),
        }
    }
}

/// A homogeneous element of a free module: a single expression for ideals, or
/// one expression per basis vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VectorExpr {
    Scalar(String),
    Components(Vec<String>),
}

impl VectorExpr {
    pub fn describe(&self) -> String {
        match self {
            VectorExpr::Scalar(s) => s.clone(),
            VectorExpr::Components(c) => format!("[{}]", c.join(", ")),
        }
    }

    pub fn map_strings(&self, f: impl Fn(&str) -> String) -> Self {
        match self {
            VectorExpr::Scalar(s) => VectorExpr::Scalar(f(s)),
            VectorExpr::Components(c) => VectorExpr::Components(c.iter().map(|x| f(x)).collect()),
        }
    }
}

/// Parses a vector of `free`; zero components may be written `0`.
pub fn parse_vector<K: Field>(alg: &Algebra<K>, free: &FreeModule, v: &VectorExpr) -> Result<Element<K::Elem>> {
    let comps: Vec<String> = match v {
        VectorExpr::Scalar(s) => vec![s.clone()],
        VectorExpr::Components(c) => c.clone(),
    };
    if comps.len() != free.rank() {
        return Err(Error::DimensionMismatch { expected: free.rank(), found: comps.len() });
    }
    let parsed = comps.iter().map(|c| alg.parse(c)).collect::<Result<Vec<_>>>()?;
    let t = parsed
        .iter()
        .zip(&free.gen_degrees)
        .find(|(e, _)| !alg.is_zero(e))
        .map(|(e, g)| e.degree + g)
        .ok_or_else(|| Error::Invalid(format!("zero vector `{}`", v.describe())))?;
    let comps: Vec<Element<K::Elem>> = parsed
        .into_iter()
        .zip(&free.gen_degrees)
        .map(|(e, &g)| if alg.is_zero(&e) && t >= g { alg.zero(t - g) } else { e })
        .collect();
    free.vector(alg, t, &comps)
}

pub struct KoszulContext<K: Field> {
    alg: Arc<Algebra<K>>,
    members: Vec<(String, GradedIdeal<K>)>,
    strongly_koszul: Option<String>,
}

impl<K: Field> KoszulContext<K> {
    pub fn new(alg: &Arc<Algebra<K>>) -> Self {
        KoszulContext { alg: alg.clone(), members: Vec::new(), strongly_koszul: None }
    }

    pub fn algebra(&self) -> &Arc<Algebra<K>> {
        &self.alg
    }

    /// Registers members of a filtration that has been verified in this ring.
    pub fn add_members(&mut self, members: Vec<(String, GradedIdeal<K>)>) {
        self.members.extend(members);
    }

    /// Trusts that the ring is strongly Koszul with respect to its variables.
    pub fn trust_strongly_koszul(&mut self, reason: impl Into<String>) {
        self.strongly_koszul = Some(reason.into());
    }

    pub fn strongly_koszul(&self) -> Option<&str> {
        self.strongly_koszul.as_deref()
    }

    pub fn member(&self, name: &str) -> Option<&GradedIdeal<K>> {
        self.members.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn resolve(&self, spec: &IdealSpec) -> Result<GradedIdeal<K>> {
        match spec {
            IdealSpec::Named(n) => named_ideal(&self.alg, n, |name| self.member(name).cloned()),
            IdealSpec::Gens(g) => {
                let g: Vec<&str> = g.iter().map(String::as_str).collect();
                ideal_from_strs(&self.alg, &g)
            }
        }
    }

    /// Reason the ring is Koszul, if one is on record.
    pub fn ring_koszul(&self) -> Option<String> {
        let m = maximal_ideal(&self.alg);
        if let Some((n, _)) = self.members.iter().find(|(_, i)| i.equals(&m).unwrap_or(false)) {
            return Some(format!("the maximal ideal is the verified filtration member {n}"));
        }
        self.strongly_koszul.as_ref().map(|r| format!("strongly Koszul ({r})"))
    }

    /// Reason `i` has a 1-linear resolution, if one of the certified routes applies.
    pub fn linear_reason(&self, i: &GradedIdeal<K>) -> Option<String> {
        if i.is_zero() {
            return Some("zero ideal".into());
        }
        for (n, m) in &self.members {
            if m.equals(i).unwrap_or(false) {
                return Some(format!("verified filtration member {n}"));
            }
        }
        if let Some(r) = &self.strongly_koszul {
            if let Some(vars) = variable_subset(i) {
                return Some(format!("generated by the variables {{{}}} of a strongly Koszul ring ({r})", vars.join(",")));
            }
        }
        if i.equals(&maximal_ideal(&self.alg)).unwrap_or(false) {
            return self.ring_koszul().map(|r| format!("maximal ideal of a Koszul ring: {r}"));
        }
        None
    }
}

impl<K: Field> KoszulContext<K> {
    /// A name or generator list for `i` under which [`Self::linear_reason`]
    /// accepts it, if any.
    pub fn certified_spec(&self, i: &GradedIdeal<K>) -> Option<IdealSpec> {
        if i.is_zero() {
            return Some(IdealSpec::Named("0".into()));
        }
        if let Some((n, _)) = self.members.iter().find(|(_, m)| m.equals(i).unwrap_or(false)) {
            return Some(IdealSpec::Named(n.clone()));
        }
        if self.strongly_koszul.is_some() {
            if let Some(vars) = variable_subset(i) {
                return Some(IdealSpec::Gens(vars));
            }
        }
        (self.ring_koszul().is_some() && i.equals(&maximal_ideal(&self.alg)).unwrap_or(false))
            .then(|| IdealSpec::Named("m".into()))
    }
}

/// Resolves `"0"`, `"m"` and member names.
pub(crate) fn named_ideal<K: Field>(
    alg: &Arc<Algebra<K>>,
    name: &str,
    lookup: impl Fn(&str) -> Option<GradedIdeal<K>>,
) -> Result<GradedIdeal<K>> {
    match name {
        "0" | "(0)" => Ok(Submodule::zero(alg, FreeModule::ring())),
        "m" | "n" => Ok(maximal_ideal(alg)),
        _ => lookup(name).ok_or_else(|| Error::Invalid(format!("unknown ideal name `{name}`"))),
    }
}

/// The variables generating `i`, when `i` is generated by a subset of the variables.
pub fn variable_subset<K: Field>(i: &GradedIdeal<K>) -> Option<Vec<String>> {
    let a = i.algebra();
    if !i.generated_in_degree(1) {
        return None;
    }
    let p = i.piece(1)?;
    let names: Vec<String> =
        (0..a.num_vars()).filter(|&j| p.contains(&a.var(j).coords)).map(|j| a.var_names()[j].clone()).collect();
    (names.len() == p.dim()).then_some(names)
}
