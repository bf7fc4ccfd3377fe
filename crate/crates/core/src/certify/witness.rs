//! Witness data for the zero-divisor criterion, for principal ideals
//! `(l1), (l2)` and for pairs of matrices, and their verification.

use std::collections::HashMap;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::context::{parse_vector, KoszulContext, VectorExpr};
use super::filtration::{verify_koszul_filtration, FiltrationCert};
use super::lift::verify_lift_chain;
use super::linear::{regularity_bound_by_induction, verify_linear_quotients, verify_socle_shift, LinearQuotientsCert};
use super::report::{Check, Report, Status};
use super::splitting::{verify_betti_splitting, SplittingRegs};
use crate::constructions::AlgebraSpec;
use crate::error::{Error, Result};
use crate::exactla::{Field, Rationals};
use crate::galgebra::{ideal, Algebra, FreeMap, FreeModule, GradedIdeal, Submodule};
use crate::resolution::{linear_part_homology, resolve, GradedModule, ResolveOptions};

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub resolve: ResolveOptions,
    /// Cutoff for numeric Betti-splitting cross-checks; `None` skips them.
    pub numeric_cutoff: Option<usize>,
    /// Budget for those cross-checks; they are skipped when it is exceeded.
    pub numeric_resolve: ResolveOptions,
    /// Cutoff for the linear-part corroboration of `(l1)`; `None` skips it.
    pub linpart_cutoff: Option<usize>,
    /// Random variable-subset colon checks when strong Koszulness is trusted.
    pub spot_checks: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            resolve: ResolveOptions::default(),
            numeric_cutoff: Some(2),
            numeric_resolve: ResolveOptions { max_rank: 600, max_cells: 300_000, ..ResolveOptions::default() },
            linpart_cutoff: None,
            spot_checks: 0,
            seed: 0,
        }
    }
}

/// How an intersection `K ∩ (l)` is known to have a linear resolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IntersectionClaim {
    SocleShift { socle_degree: usize },
    LinearQuotients(LinearQuotientsCert),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCerts {
    /// A Koszul filtration of the ring before the linear quotient.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<FiltrationCert>,
    /// Trusted strong Koszulness of the ring before the linear quotient, with its source.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strongly_koszul: Option<String>,
    #[serde(rename = "K1", default, skip_serializing_if = "Option::is_none")]
    pub k1: Option<LinearQuotientsCert>,
    #[serde(rename = "K2", default, skip_serializing_if = "Option::is_none")]
    pub k2: Option<LinearQuotientsCert>,
    #[serde(rename = "L1", default, skip_serializing_if = "Option::is_none")]
    pub l1: Option<IntersectionClaim>,
    #[serde(rename = "L2", default, skip_serializing_if = "Option::is_none")]
    pub l2: Option<IntersectionClaim>,
}

impl WitnessCerts {
    fn swapped(&self) -> Self {
        WitnessCerts {
            filtration: self.filtration.clone(),
            strongly_koszul: self.strongly_koszul.clone(),
            k1: self.k2.clone(),
            k2: self.k1.clone(),
            l1: self.l2.clone(),
            l2: self.l1.clone(),
        }
    }

    fn map_strings(&self, f: &impl Fn(&str) -> String) -> Self {
        let lq = |c: &Option<LinearQuotientsCert>| {
            c.as_ref().map(|c| LinearQuotientsCert {
                chain: c.chain.iter().map(|v| v.map_strings(f)).collect(),
                colons: c
                    .colons
                    .iter()
                    .map(|s| match s {
                        super::context::IdealSpec::Gens(g) => super::context::IdealSpec::Gens(g.iter().map(|x| f(x)).collect()),
                        other => other.clone(),
                    })
                    .collect(),
            })
        };
        let filtration = self.filtration.as_ref().map(|fc| {
            let mut fc = fc.clone();
            for i in &mut fc.ideals {
                i.gens = i.gens.iter().map(|g| f(g)).collect();
            }
            for s in &mut fc.steps {
                s.element = f(&s.element);
            }
            fc
        });
        WitnessCerts { filtration, k1: lq(&self.k1), k2: lq(&self.k2), ..self.clone() }
    }
}

/// `(0):l1 = K2 + (l2)`, `(0):l2 = K1 + (l1)` with supporting certificates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(default)]
    pub name: String,
    pub algebra: AlgebraSpec,
    /// `perm[i]` is the 1-based index of the variable that the witness's
    /// variable `i+1` stands for.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub perm: Option<Vec<usize>>,
    pub l1: String,
    pub l2: String,
    #[serde(rename = "K1")]
    pub k1: Vec<String>,
    #[serde(rename = "K2")]
    pub k2: Vec<String>,
    #[serde(default)]
    pub certs: WitnessCerts,
}

/// Renames identifiers token by token.
fn rename_vars(expr: &str, map: &HashMap<String, String>) -> String {
    let mut out = String::with_capacity(expr.len());
    let mut chars = expr.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i + c.len_utf8();
            while let Some(&(j, d)) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    end = j + d.len_utf8();
                    chars.next();
                } else {
                    break;
                }
            }
            let tok = &expr[i..end];
            out.push_str(map.get(tok).map(String::as_str).unwrap_or(tok));
        } else {
            out.push(c);
        }
    }
    out
}

impl Witness {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "witness".into(), message: e.to_string() })
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    /// The same witness with the roles of `(l1, K1)` and `(l2, K2)` exchanged.
    pub fn swapped(&self) -> Self {
        Witness {
            l1: self.l2.clone(),
            l2: self.l1.clone(),
            k1: self.k2.clone(),
            k2: self.k1.clone(),
            certs: self.certs.swapped(),
            ..self.clone()
        }
    }

    /// Applies `perm` to every expression; `names` are the variables of the base ring.
    pub fn permuted(&self, names: &[String]) -> Result<Self> {
        let Some(perm) = &self.perm else { return Ok(self.clone()) };
        let n = names.len();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p == 0 || p > n || std::mem::replace(&mut seen[p - 1], true)) {
            return Err(Error::Invalid(format!("perm is not a permutation of 1..{n}")));
        }
        let map: HashMap<String, String> = (0..n).map(|i| (names[i].clone(), names[perm[i] - 1].clone())).collect();
        let f = |s: &str| rename_vars(s, &map);
        let mut algebra = self.algebra.clone();
        algebra.quotient_linear = algebra.quotient_linear.iter().map(|s| f(s)).collect();
        Ok(Witness {
            name: self.name.clone(),
            algebra,
            perm: None,
            l1: f(&self.l1),
            l2: f(&self.l2),
            k1: self.k1.iter().map(|s| f(s)).collect(),
            k2: self.k2.iter().map(|s| f(s)).collect(),
            certs: self.certs.map_strings(&f),
        })
    }

    /// The witness as a pair of 1×1 matrices `l1`, `l2` of degree 1. Apply
    /// [`Witness::permuted`] first if the witness carries a permutation.
    pub fn to_matrix(&self) -> MatrixWitness {
        let one = |l: &str| MatrixSpec { target_degrees: vec![0], source_degrees: vec![1], entries: vec![vec![l.to_string()]] };
        let vecs = |k: &[String]| k.iter().map(|s| VectorExpr::Scalar(s.clone())).collect();
        let mut certs = self.certs.clone();
        for c in [&mut certs.l1, &mut certs.l2].into_iter().flatten() {
            if let IntersectionClaim::SocleShift { socle_degree } = c {
                *socle_degree += 1;
            }
        }
        MatrixWitness {
            name: self.name.clone(),
            algebra: self.algebra.clone(),
            phi1: one(&self.l1),
            phi2: Some(one(&self.l2)),
            k1: vecs(&self.k1),
            k2: vecs(&self.k2),
            certs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub target_degrees: Vec<usize>,
    pub source_degrees: Vec<usize>,
    /// Row-major entries.
    pub entries: Vec<Vec<String>>,
}

impl MatrixSpec {
    pub fn build<K: Field>(&self, alg: &Algebra<K>) -> Result<FreeMap<K::Elem>> {
        let entries = self
            .entries
            .iter()
            .map(|row| row.iter().map(|e| alg.parse(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FreeMap::from_matrix(alg, FreeModule::new(self.target_degrees.clone()), self.source_degrees.clone(), &entries)
    }
}

/// `φ1∘φ2 = 0 = φ2∘φ1`, `Ker φ1 = Im φ2 + K2`, `Ker φ2 = Im φ1 + K1`.
/// `K2` lives in the source of `φ1`, `K1` in the source of `φ2`; in the
/// certificates, degrees are those of these source modules.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixWitness {
    #[serde(default)]
    pub name: String,
    pub algebra: AlgebraSpec,
    pub phi1: MatrixSpec,
    /// Defaults to `phi1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi2: Option<MatrixSpec>,
    #[serde(rename = "K1")]
    pub k1: Vec<VectorExpr>,
    #[serde(rename = "K2")]
    pub k2: Vec<VectorExpr>,
    #[serde(default)]
    pub certs: WitnessCerts,
}

impl MatrixWitness {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "matrix witness".into(), message: e.to_string() })
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }
}

/// Either kind of witness file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AnyWitness {
    Matrix(MatrixWitness),
    Scalar(Witness),
}

impl AnyWitness {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "witness".into(), message: e.to_string() })
    }

    pub fn algebra(&self) -> &AlgebraSpec {
        match self {
            AnyWitness::Matrix(m) => &m.algebra,
            AnyWitness::Scalar(w) => &w.algebra,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            AnyWitness::Matrix(m) => &m.name,
            AnyWitness::Scalar(w) => &w.name,
        }
    }
}

/// Rings of a witness: the base `U` and `W = U / (quotient forms)`, with the
/// Koszulness information established for each.
pub struct Rings {
    pub spec: AlgebraSpec,
    pub u: Arc<Algebra<Rationals>>,
    pub w: Arc<Algebra<Rationals>>,
    pub ctx_u: KoszulContext<Rationals>,
    pub ctx_w: KoszulContext<Rationals>,
    /// Checks on the ring certificates (filtration, strong Koszulness).
    pub checks: Vec<Check>,
}

impl Rings {
    /// Builds both rings and verifies the ring-level certificates in `certs`.
    pub fn prepare(spec: &AlgebraSpec, certs: &WitnessCerts, opts: &CertifyOptions) -> Result<Self> {
        let mut checks = Vec::new();
        let mut r = setup_rings(spec, certs, opts, &mut checks)?;
        r.checks = checks;
        Ok(r)
    }
}

fn setup_rings(spec: &AlgebraSpec, certs: &WitnessCerts, opts: &CertifyOptions, checks: &mut Vec<Check>) -> Result<Rings> {
    let base_spec = AlgebraSpec { base: spec.base.clone(), quotient_linear: Vec::new() };
    let u = Arc::new(base_spec.build()?);
    let w = if spec.quotient_linear.is_empty() { u.clone() } else { Arc::new(spec.build()?) };
    let quotient = !Arc::ptr_eq(&u, &w);
    let mut ctx_u = KoszulContext::new(&u);
    let mut ctx_w = KoszulContext::new(&w);
    if let Some(f) = &certs.filtration {
        let out = verify_koszul_filtration(&u, f, "filtration(U) ");
        checks.extend(out.checks);
        if out.ok {
            ctx_u.add_members(out.members.clone());
            if !quotient {
                ctx_w.add_members(out.members);
            }
        }
        if quotient {
            let out = verify_koszul_filtration(&w, f, "filtration(W) ");
            checks.extend(out.checks);
            if out.ok {
                ctx_w.add_members(out.members);
            }
        }
    }
    if let Some(reason) = &certs.strongly_koszul {
        ctx_u.trust_strongly_koszul(reason.clone());
        // a quotient by variables of a strongly Koszul ring is strongly Koszul
        let vars_only = spec.quotient_linear.iter().all(|f| u.var_names().iter().any(|v| v == f.trim()));
        let ok = vars_only;
        checks.push(
            Check::new(
                "strongly-koszul",
                "strong Koszulness of the base ring is trusted and passes to the quotient",
                ok,
                if ok {
                    format!("trusted: {reason}; quotient by variables {:?}", spec.quotient_linear)
                } else {
                    "quotient forms are not all variables".into()
                },
            ),
        );
        if ok {
            ctx_w.trust_strongly_koszul(reason.clone());
        }
        if opts.spot_checks > 0 {
            checks.push(strong_koszul_spot_check(&w, opts.spot_checks, opts.seed));
        }
    }
    Ok(Rings { spec: spec.clone(), u, w, ctx_u, ctx_w, checks: Vec::new() })
}

/// Random `(x_{i1}, ..., x_{ik}) : x_j` colons must be generated by variables.
pub fn strong_koszul_spot_check<K: Field>(alg: &Arc<Algebra<K>>, trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.num_vars();
    let mut bad = Vec::new();
    for _ in 0..trials {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut rng);
        let k = rand::Rng::gen_range(&mut rng, 0..n.max(1));
        let gens: Vec<_> = idx[..k].iter().map(|&i| alg.var(i)).collect();
        let x = alg.var(idx[k.min(n - 1)]);
        let colon = ideal(alg, &gens).and_then(|i| i.colon(&x));
        match colon {
            Ok(c) if super::context::variable_subset(&c).is_some() => {}
            Ok(_) => bad.push(format!("{} vars : {}", k, alg.var_names()[idx[k.min(n - 1)]])),
            Err(e) => bad.push(e.to_string()),
        }
    }
    Check::new(
        "strongly-koszul spot check",
        "sampled variable-subset colons are generated by variables",
        bad.is_empty(),
        format!("{trials} samples, seed {}{}", seed, if bad.is_empty() { String::new() } else { format!("; failures: {}", bad.join("; ")) }),
    )
    .informational()
}

/// One half of the criterion: `ker = partner + k` inside `free`.
struct Side<K: Field> {
    ker: Submodule<K>,
    partner: Submodule<K>,
    k: Submodule<K>,
    k_cert: Option<LinearQuotientsCert>,
    l_claim: Option<IntersectionClaim>,
    free: FreeModule,
    /// Degrees of the syzygy module minus displayed degrees.
    shift: usize,
    /// Displayed degrees of `partner` minus its own degrees.
    partner_offset: usize,
    /// Generator degree of the image this kernel belongs to.
    image_degree: usize,
    ker_name: String,
    k_name: String,
    partner_name: String,
    image_name: String,
}

/// Conditions (ii)-(v) for both halves.
fn core_checks<K: Field>(ctx: &KoszulContext<K>, sides: &[Side<K>; 2], opts: &CertifyOptions) -> Vec<Check> {
    let mut checks = Vec::new();
    for s in sides {
        let ok = s.partner.sum(&s.k).and_then(|x| x.equals(&s.ker));
        let ev = format!("{} minimal generators (degree, count): {:?}", s.ker_name, s.ker.min_gens());
        checks.push(match ok {
            Ok(ok) => Check::new(
                format!("(ii) {}", s.ker_name),
                format!("{} = {} + {}", s.ker_name, s.k_name, s.partner_name),
                ok,
                ev,
            ),
            Err(e) => Check::new(format!("(ii) {}", s.ker_name), "colon decomposition", false, e.to_string()),
        });
    }
    for s in sides {
        let partner_top = s.partner.min_gens().last().map(|(d, _)| *d).unwrap_or(0);
        let k_gens = s.k.min_gens();
        let ok = k_gens.iter().any(|(d, _)| *d > partner_top);
        checks.push(Check::new(
            format!("(iii) {}", s.k_name),
            format!("{} is nonzero and not generated in the degree of {}", s.k_name, s.partner_name),
            ok,
            format!("minimal generators of {}: {:?}", s.k_name, k_gens),
        ));
        let t1 = s.ker.min_gens().last().map(|(d, _)| d + s.shift).unwrap_or(0);
        let ok = t1 > s.image_degree + 1;
        checks.push(Check::new(
            format!("(iii) {}", s.image_name),
            format!("{} does not have a linear resolution", s.image_name),
            ok,
            format!("first syzygies reach degree {t1}, generators in degree {}", s.image_degree),
        ));
    }

    // intersections
    let mut l_degrees: [Option<usize>; 2] = [None, None];
    let mut l_nonzero = [false, false];
    for (idx, s) in sides.iter().enumerate() {
        let id = format!("(iv) {} ∩ {}", s.k_name, s.partner_name);
        let l = match s.k.intersect(&s.partner) {
            Ok(l) => l,
            Err(e) => {
                checks.push(Check::new(id, "intersection", false, e.to_string()));
                continue;
            }
        };
        if l.is_zero() {
            let ok = s.l_claim.is_none();
            checks.push(Check::new(id, "intersection is zero", ok, if ok { "" } else { "a nonzero intersection was claimed" }));
            continue;
        }
        l_nonzero[idx] = true;
        let (mut c, d) = match &s.l_claim {
            Some(IntersectionClaim::LinearQuotients(cert)) => verify_linear_quotients(ctx, &s.free, &l, cert, &id),
            Some(IntersectionClaim::SocleShift { socle_degree }) => verify_socle_shift(ctx, &l, Some(*socle_degree), &id),
            None => verify_socle_shift(ctx, &l, None, &id),
        };
        c.evidence = format!("dims {:?}; {}", l.dims(), c.evidence);
        l_degrees[idx] = d;
        checks.push(c);
    }

    // certificates for K
    let mut k_degrees: [Option<usize>; 2] = [None, None];
    for (idx, s) in sides.iter().enumerate() {
        if let Some(cert) = &s.k_cert {
            let (c, d) = verify_linear_quotients(ctx, &s.free, &s.k, cert, &format!("cert {}", s.k_name));
            checks.push(Check { description: format!("{} {}", s.k_name, c.description), ..c });
            k_degrees[idx] = d;
        }
    }

    // regularity bound, needed only for route (b)
    let mut reg: Option<usize> = None;
    if l_nonzero.iter().any(|&b| b) {
        let id = "regularity induction";
        let desc = "inductive bound t_i ≤ i + r for both images";
        if k_degrees.iter().all(|d| d.is_some()) && (0..2).all(|i| !l_nonzero[i] || l_degrees[i].is_some()) {
            let t0 = sides.iter().map(|s| s.image_degree).max().unwrap_or(1);
            let t1 = sides.iter().map(|s| s.ker.min_gens().last().map(|(d, _)| d + s.shift).unwrap_or(0)).max().unwrap_or(0);
            let ks: Vec<usize> = (0..2).map(|i| k_degrees[i].unwrap() + sides[i].shift).collect();
            let ls: Vec<usize> = (0..2).filter_map(|i| l_degrees[i].map(|d| d + sides[i].shift)).collect();
            let r = regularity_bound_by_induction(t0, t1, &ks, &ls);
            checks.push(Check::new(
                id,
                format!("{desc}: r = {r}"),
                true,
                format!("t0 = {t0}, t1 = {t1} computed; K linear in syzygy degrees {ks:?}, L in {ls:?}"),
            ));
            reg = Some(r);
        } else {
            checks.push(Check::with_status(id, desc, Status::Inconclusive, "missing linear-resolution certificates for K or L"));
        }
    }

    for (idx, s) in sides.iter().enumerate() {
        let regs = SplittingRegs { reg1: k_degrees[idx], reg2: reg.map(|r| r + s.partner_offset) };
        let numeric = opts.numeric_cutoff.map(|c| (c, &opts.numeric_resolve));
        let c = verify_betti_splitting(&s.ker, &s.k, &s.partner, regs, numeric, &format!("(v) {}", s.ker_name));
        checks.push(Check { description: format!("{} = {} + {} {}", s.ker_name, s.k_name, s.partner_name, c.description), ..c });
    }
    checks
}

fn parse_ideal<K: Field>(alg: &Arc<Algebra<K>>, gens: &[String]) -> Result<GradedIdeal<K>> {
    let g = gens.iter().map(|s| alg.parse(s)).collect::<Result<Vec<_>>>()?;
    ideal(alg, &g)
}

fn linpart_check<K: Field>(module: &GradedModule<K>, name: &str, cutoff: usize, opts: &ResolveOptions) -> Check {
    let id = format!("linear part of {name}");
    match linear_part_homology(module, cutoff, opts) {
        Ok(rep) => Check::new(
            id,
            format!("H_i(lin F) is nonzero for 1 ≤ i ≤ {cutoff}"),
            rep.nonzero_through(cutoff),
            format!("dims {:?} ({:?})", &rep.homology_dims[1..], rep.method),
        ),
        Err(e) => Check::with_status(id, "linear-part corroboration", Status::Inconclusive, e.to_string()),
    }
    .informational()
}

/// Verifies a witness over the rationals, including the lift chain to the
/// Cohen–Macaulay ring it came from.
pub fn verify_witness(w: &Witness, opts: &CertifyOptions) -> Result<Report> {
    let base_spec = AlgebraSpec { base: w.algebra.base.clone(), quotient_linear: Vec::new() };
    let w = if w.perm.is_some() { w.permuted(base_spec.build()?.var_names())? } else { w.clone() };
    let rings = Rings::prepare(&w.algebra, &w.certs, opts)?;
    verify_witness_in(&w, &rings, opts)
}

/// [`verify_witness`] over rings prepared once, e.g. for many candidates. The
/// ring certificates of `rings` are used; those in `w.certs` are ignored.
pub fn verify_witness_in(w: &Witness, rings: &Rings, opts: &CertifyOptions) -> Result<Report> {
    if w.perm.is_some() {
        return Err(Error::Invalid("apply the variable permutation before verifying in prepared rings".into()));
    }
    if w.algebra != rings.spec {
        return Err(Error::Invalid("witness algebra differs from the prepared rings".into()));
    }
    let mut checks = rings.checks.clone();
    let alg = &rings.w;
    let subject = format!("{} over {}", if w.name.is_empty() { "witness" } else { &w.name }, w.algebra.describe());

    let parsed = (|| -> Result<_> {
        let l1 = alg.parse(&w.l1)?;
        let l2 = alg.parse(&w.l2)?;
        Ok((l1, l2, parse_ideal(alg, &w.k1)?, parse_ideal(alg, &w.k2)?))
    })();
    let (l1, l2, k1, k2) = match parsed {
        Ok(x) => x,
        Err(e) => {
            checks.push(Check::new("parse", "witness expressions parse in the algebra", false, e.to_string()));
            return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
        }
    };
    let lin = l1.degree == 1 && l2.degree == 1;
    let nonzero = !alg.is_zero(&l1) && !alg.is_zero(&l2);
    let prod = alg.mul(&l1, &l2)?;
    checks.push(Check::new(
        "(i)",
        "l1, l2 are nonzero linear forms with l1·l2 = 0",
        lin && nonzero && alg.is_zero(&prod),
        format!("l1 = {}, l2 = {}, l1·l2 = {}", alg.format(&l1), alg.format(&l2), alg.format(&prod)),
    ));
    if !(lin && nonzero) {
        return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
    }

    let zero = Submodule::zero(alg, FreeModule::ring());
    let side = |l: &crate::galgebra::Element<_>, partner_l, k: &GradedIdeal<Rationals>, cert: &Option<LinearQuotientsCert>, claim: &Option<IntersectionClaim>, i: usize| -> Result<Side<Rationals>> {
        let j = 3 - i;
        Ok(Side {
            ker: zero.colon(l)?,
            partner: ideal(alg, &[partner_l])?,
            k: k.clone(),
            k_cert: cert.clone(),
            l_claim: claim.clone(),
            free: FreeModule::ring(),
            shift: 1,
            partner_offset: 0,
            image_degree: 1,
            ker_name: format!("(0):l{i}"),
            k_name: format!("K{j}"),
            partner_name: format!("(l{j})"),
            image_name: format!("(l{i})"),
        })
    };
    let sides = [
        side(&l1, l2.clone(), &k2, &w.certs.k2, &w.certs.l2, 1)?,
        side(&l2, l1.clone(), &k1, &w.certs.k1, &w.certs.l1, 2)?,
    ];
    checks.extend(core_checks(&rings.ctx_w, &sides, opts));

    if let Some(c) = opts.linpart_cutoff {
        checks.push(linpart_check(&GradedModule::ideal(ideal(alg, &[l1.clone()])?), "(l1)", c, &opts.resolve));
    }
    let lift = verify_lift_chain(&w.algebra, &rings.u, &rings.ctx_u);
    let trunc = (!alg.is_artinian()).then(|| alg.top());
    Ok(Report::assemble(subject, checks, lift, trunc, Vec::new()))
}

/// Lemma-style verification for matrices: `Im φ1`, `Im φ2` have infinite linearity defect.
pub fn verify_matrix_witness(w: &MatrixWitness, opts: &CertifyOptions) -> Result<Report> {
    let mut checks = Vec::new();
    let rings = setup_rings(&w.algebra, &w.certs, opts, &mut checks)?;
    let alg = &rings.w;
    let subject = format!("{} over {}", if w.name.is_empty() { "matrix witness" } else { &w.name }, w.algebra.describe());
    let phi2_spec = w.phi2.as_ref().unwrap_or(&w.phi1);
    let built = (|| -> Result<_> { Ok((w.phi1.build(alg.as_ref())?, phi2_spec.build(alg.as_ref())?)) })();
    let (phi1, phi2) = match built {
        Ok(x) => x,
        Err(e) => {
            checks.push(Check::new("parse", "matrices parse in the algebra", false, e.to_string()));
            return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
        }
    };
    // shift s with target(φ_b)(-s) = source(φ_a)
    let shift_into = |a: &FreeMap<_>, b: &FreeMap<_>| -> Option<usize> {
        let s = a.source.gen_degrees.first()?.checked_sub(*b.target.gen_degrees.first()?)?;
        let ok = a.source.rank() == b.target.rank()
            && a.source.gen_degrees.iter().zip(&b.target.gen_degrees).all(|(x, y)| x.checked_sub(*y) == Some(s));
        ok.then_some(s)
    };
    let (Some(s12), Some(s21)) = (shift_into(&phi1, &phi2), shift_into(&phi2, &phi1)) else {
        checks.push(Check::new("(i)", "the matrices compose", false, "source and target degrees are incompatible"));
        return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
    };
    let phi2_in = phi2.shifted(s12);
    let phi1_in = phi1.shifted(s21);
    let c1 = phi1.composes_to_zero(alg.as_ref(), &phi2_in)?;
    let c2 = phi2.composes_to_zero(alg.as_ref(), &phi1_in)?;
    let nonzero = phi1.columns.iter().any(|c| !c.coords.iter().all(|x| alg.field().is_zero(x)))
        && phi2.columns.iter().any(|c| !c.coords.iter().all(|x| alg.field().is_zero(x)));
    checks.push(Check::new(
        "(i)",
        "φ1, φ2 are nonzero and φ1∘φ2 = 0 = φ2∘φ1",
        c1 && c2 && nonzero,
        format!("φ1∘φ2 = 0: {c1}, φ2∘φ1 = 0: {c2}"),
    ));
    if !(c1 && c2 && nonzero) {
        return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
    }
    if s12 != 1 || s21 != 1 {
        checks.push(Check::with_status(
            "degrees",
            "matrices are linear",
            Status::Inconclusive,
            format!("composition shifts {s12}, {s21}; the regularity induction needs 1"),
        ));
    }
    let vecs = |free: &FreeModule, v: &[VectorExpr]| -> Result<Submodule<Rationals>> {
        let g = v.iter().map(|x| parse_vector(alg.as_ref(), free, x)).collect::<Result<Vec<_>>>()?;
        Submodule::generated_by(alg, free.clone(), &g)
    };
    let image_degree = |f: &FreeMap<_>| f.columns.iter().map(|c| c.degree).max().unwrap_or(0);
    let side = |phi: &FreeMap<_>, partner_in: &FreeMap<_>, k: &[VectorExpr], cert: &Option<LinearQuotientsCert>, claim: &Option<IntersectionClaim>, s: usize, i: usize| -> Result<Side<Rationals>> {
        let j = 3 - i;
        Ok(Side {
            ker: phi.kernel(alg)?,
            partner: partner_in.image(alg)?,
            k: vecs(&phi.source, k)?,
            k_cert: cert.clone(),
            l_claim: claim.clone(),
            free: phi.source.clone(),
            shift: 0,
            partner_offset: s,
            image_degree: image_degree(phi),
            ker_name: format!("Ker φ{i}"),
            k_name: format!("K{j}"),
            partner_name: format!("Im φ{j}"),
            image_name: format!("Im φ{i}"),
        })
    };
    let sides = match (|| -> Result<_> {
        Ok([
            side(&phi1, &phi2_in, &w.k2, &w.certs.k2, &w.certs.l2, s12, 1)?,
            side(&phi2, &phi1_in, &w.k1, &w.certs.k1, &w.certs.l1, s21, 2)?,
        ])
    })() {
        Ok(s) => s,
        Err(e) => {
            checks.push(Check::new("parse", "K vectors parse in the source modules", false, e.to_string()));
            return Ok(Report::assemble(subject, checks, Vec::new(), None, Vec::new()));
        }
    };
    // columns must be minimal generators for Ker φ to be the first syzygy
    for (i, phi) in [&phi1, &phi2].into_iter().enumerate() {
        let im = phi.image(alg)?;
        let mingens: usize = im.min_gens().iter().map(|(_, c)| c).sum();
        checks.push(Check::new(
            format!("minimal φ{}", i + 1),
            format!("the columns of φ{} minimally generate its image", i + 1),
            mingens == phi.source.rank(),
            format!("{mingens} minimal generators, {} columns", phi.source.rank()),
        ));
    }
    checks.extend(core_checks(&rings.ctx_w, &sides, opts));
    if let Some(c) = opts.linpart_cutoff {
        checks.push(linpart_check(&GradedModule::image(alg, &phi1)?, "Im φ1", c, &opts.resolve));
    }
    let lift = verify_lift_chain(&w.algebra, &rings.u, &rings.ctx_u);
    let trunc = (!alg.is_artinian()).then(|| alg.top());
    Ok(Report::assemble(subject, checks, lift, trunc, Vec::new()))
}

/// Dispatches on the witness kind.
pub fn verify_any(w: &AnyWitness, opts: &CertifyOptions) -> Result<Report> {
    match w {
        AnyWitness::Matrix(m) => verify_matrix_witness(m, opts),
        AnyWitness::Scalar(s) => verify_witness(s, opts),
    }
}

/// Regularity of a module through `cutoff`, for cross-checking certified bounds.
pub fn numeric_regularity<K: Field>(m: &Submodule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<Option<i64>> {
    Ok(resolve(&GradedModule::submodule(m.clone()), cutoff, opts)?.betti().regularity())
}
