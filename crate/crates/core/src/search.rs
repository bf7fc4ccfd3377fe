//! Search for zero-divisor witnesses among sparse linear forms with small
//! integer coefficients.
//!
//! `l1` runs over pool-sparse forms (exhaustively by support size, or at
//! random); `l2` is read off the kernel of multiplication by `l1` from degree 1
//! to degree 2, and `K1`, `K2` are the non-linear minimal generators of the
//! annihilators.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::certify::{
    suggest_linear_quotients, verify_witness_in, CertifyOptions, Report, Rings, Status, Witness, WitnessCerts,
};
use crate::constructions::AlgebraSpec;
use crate::error::{Error, Result};
use crate::exactla::{primitive_integer_vector, Field, PrimeField, Rationals, Subspace};
use crate::galgebra::{ideal, Algebra, Element, FreeModule, Submodule};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchMode {
    #[default]
    ExhaustiveSparse,
    Randomized,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub coefficient_pool: Vec<i64>,
    pub max_support: usize,
    pub seed: u64,
    /// Number of `l1` forms examined.
    pub max_candidates: usize,
    pub max_seconds: Option<f64>,
    pub mode: SearchMode,
    /// Discard `l1` whose degree-1 annihilator vanishes mod this prime.
    pub prefilter_prime: Option<u64>,
    /// Stop after this many certified witnesses.
    pub max_witnesses: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            coefficient_pool: vec![-1, 1, 2, 3, 6],
            max_support: 5,
            seed: 0,
            max_candidates: 1_000_000,
            max_seconds: Some(1800.0),
            mode: SearchMode::ExhaustiveSparse,
            prefilter_prime: None,
            max_witnesses: Some(1),
        }
    }
}

/// A search job as read from a file: the ring, ring-level certificates copied
/// into every candidate witness, and the search parameters.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SearchJob {
    pub algebra: AlgebraSpec,
    #[serde(default)]
    pub certs: WitnessCerts,
    #[serde(default)]
    pub config: SearchConfig,
}

impl SearchJob {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { input: "search job".into(), message: e.to_string() })
    }
}

/// A pair of linear forms with `l1·l2 = 0`, as integer coefficient vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroDivisorPair {
    /// Position of `l1` in the candidate stream.
    pub index: usize,
    pub l1: Vec<i64>,
    pub l2: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Candidate {
    pub index: usize,
    pub l1: String,
    pub l2: String,
    pub k1: Vec<String>,
    pub k2: Vec<String>,
    /// Required checks passed.
    pub score: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub witnesses: Vec<Witness>,
    pub reports: Vec<Report>,
    /// Every pair that reached full verification.
    pub candidates: Vec<Candidate>,
    pub forms_examined: usize,
    pub pairs_found: usize,
    /// The whole search space was covered.
    pub exhausted: bool,
    pub stopped_by: Option<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct PairOutcome {
    pub pairs: Vec<ZeroDivisorPair>,
    pub forms_examined: usize,
    pub exhausted: bool,
    pub stopped_by: Option<String>,
}

/// Deterministic stream of pool-sparse coefficient vectors.
struct FormStream {
    n: usize,
    pool: Vec<i64>,
    max_support: usize,
    mode: SearchMode,
    rng: ChaCha8Rng,
    // exhaustive state
    support: Vec<usize>,
    coef: Vec<usize>,
    done: bool,
}

impl FormStream {
    fn new(n: usize, cfg: &SearchConfig) -> Result<Self> {
        let mut pool: Vec<i64> = cfg.coefficient_pool.iter().copied().filter(|&c| c != 0).collect();
        pool.dedup();
        if pool.is_empty() {
            return Err(Error::Invalid("coefficient pool has no nonzero entries".into()));
        }
        let max_support = cfg.max_support.min(n);
        Ok(FormStream {
            n,
            pool,
            max_support,
            mode: cfg.mode,
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            support: if max_support > 0 { vec![0] } else { Vec::new() },
            coef: vec![0],
            done: max_support == 0 || n == 0,
        })
    }

    fn vector(&self, support: &[usize], coef: &[usize]) -> Vec<i64> {
        let mut v = vec![0i64; self.n];
        for (&s, &c) in support.iter().zip(coef) {
            v[s] = self.pool[c];
        }
        v
    }

    /// Advances the exhaustive state: coefficients fastest, then supports in
    /// lexicographic order, then support size.
    fn advance(&mut self) {
        let p = self.pool.len();
        for i in (0..self.coef.len()).rev() {
            if self.coef[i] + 1 < p {
                self.coef[i] += 1;
                return;
            }
            self.coef[i] = 0;
        }
        let k = self.support.len();
        for i in (0..k).rev() {
            if self.support[i] < self.n - k + i {
                self.support[i] += 1;
                for j in i + 1..k {
                    self.support[j] = self.support[j - 1] + 1;
                }
                return;
            }
        }
        if k < self.max_support {
            self.support = (0..k + 1).collect();
            self.coef = vec![0; k + 1];
        } else {
            self.done = true;
        }
    }

    /// Next vector, skipping non-canonical scalings in exhaustive mode.
    fn next(&mut self) -> Option<Vec<i64>> {
        match self.mode {
            SearchMode::ExhaustiveSparse => loop {
                if self.done {
                    return None;
                }
                let v = self.vector(&self.support.clone(), &self.coef.clone());
                self.advance();
                if is_canonical(&v, &self.pool) {
                    return Some(v);
                }
            },
            SearchMode::Randomized => {
                let k = self.rng.gen_range(1..=self.max_support);
                let mut support = sample(&mut self.rng, self.n, k).into_vec();
                support.sort_unstable();
                let coef: Vec<usize> = (0..k).map(|_| self.rng.gen_range(0..self.pool.len())).collect();
                Some(self.vector(&support, &coef))
            }
        }
    }
}

/// `v` is the first pool-representable multiple of its line, so each line of
/// forms is visited once.
fn is_canonical(v: &[i64], pool: &[i64]) -> bool {
    canonical_multiple(v, pool).as_deref() == Some(v)
}

fn canonical_multiple(v: &[i64], pool: &[i64]) -> Option<Vec<i64>> {
    let g = v.iter().fold(0i64, |a, &b| num_integer::gcd(a, b));
    if g == 0 {
        return None;
    }
    let lead = v.iter().find(|&&x| x != 0).copied()?;
    let prim: Vec<i64> = v.iter().map(|&x| x / g * lead.signum()).collect();
    let max_pool = pool.iter().map(|c| c.abs()).max().unwrap_or(1);
    for sign in [1i64, -1] {
        for m in 1..=max_pool {
            let w: Vec<i64> = prim.iter().map(|&x| x * m * sign).collect();
            if w.iter().all(|x| *x == 0 || pool.contains(x)) {
                return Some(w);
            }
        }
    }
    None
}

fn form_string(names: &[String], v: &[i64]) -> String {
    let mut out = String::new();
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        let term = if mag == 1 { names[i].clone() } else { format!("{mag}*{}", names[i]) };
        if out.is_empty() {
            out = if c < 0 { format!("-{term}") } else { term };
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn linear_form<K: Field>(alg: &Algebra<K>, v: &[i64]) -> Element<K::Elem> {
    let k = alg.field();
    Element { degree: 1, coords: v.iter().map(|&c| k.from_i64(c)).collect() }
}

/// Annihilator of `l` in degree 1.
fn degree_one_kernel<K: Field>(alg: &Algebra<K>, l: &Element<K::Elem>) -> Result<Subspace<K>> {
    Ok(alg.mult_matrix(l, 1)?.kernel())
}

/// Pool-sparse vectors of a subspace in reduced echelon form: every such
/// vector is determined by its values at the pivots, which must themselves be
/// pool-sparse.
fn sparse_vectors_in(space: &Subspace<Rationals>, pool: &[i64], max_support: usize, limit: usize) -> Vec<Vec<i64>> {
    let k = space.dim();
    let values: Vec<i64> = pool.iter().copied().filter(|&c| c != 0).collect();
    let mut out = Vec::new();
    let mut assign = vec![0i64; k];
    fn rec(
        space: &Subspace<Rationals>,
        values: &[i64],
        pool: &[i64],
        max_support: usize,
        limit: usize,
        pos: usize,
        used: usize,
        assign: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if out.len() >= limit {
            return;
        }
        if pos == assign.len() {
            if used == 0 {
                return;
            }
            let n = space.ambient();
            let mut v = vec![BigRational::zero(); n];
            for (b, &a) in space.basis().iter().zip(assign.iter()) {
                if a == 0 {
                    continue;
                }
                let a = BigRational::from_integer(BigInt::from(a));
                for (x, y) in v.iter_mut().zip(b) {
                    *x += &a * y;
                }
            }
            let ints: Option<Vec<i64>> =
                v.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect();
            if let Some(ints) = ints {
                let support = ints.iter().filter(|&&x| x != 0).count();
                if support <= max_support && ints.iter().all(|x| *x == 0 || pool.contains(x)) && is_canonical(&ints, pool) {
                    out.push(ints);
                }
            }
            return;
        }
        assign[pos] = 0;
        rec(space, values, pool, max_support, limit, pos + 1, used, assign, out);
        if used < max_support {
            for &c in values {
                assign[pos] = c;
                rec(space, values, pool, max_support, limit, pos + 1, used + 1, assign, out);
            }
            assign[pos] = 0;
        }
    }
    rec(space, &values, pool, max_support, limit, 0, 0, &mut assign, &mut out);
    out
}

/// Mod-p copy of an algebra, when its structure constants reduce.
fn reduce_mod_p(alg: &Algebra<Rationals>, p: u64) -> Result<Algebra<PrimeField>> {
    let f = PrimeField::new(p).ok_or_else(|| Error::Invalid(format!("{p} is not a usable prime")))?;
    alg.map_field(f, |x| f.from_rational(x))
}

struct Budget {
    start: Instant,
    max_forms: usize,
    max_time: Option<Duration>,
}

impl Budget {
    fn new(cfg: &SearchConfig) -> Self {
        Budget {
            start: Instant::now(),
            max_forms: cfg.max_candidates,
            max_time: cfg.max_seconds.map(Duration::from_secs_f64),
        }
    }

    fn exceeded(&self, forms: usize) -> Option<String> {
        if forms >= self.max_forms {
            return Some(format!("candidate budget of {} forms", self.max_forms));
        }
        match self.max_time {
            Some(t) if self.start.elapsed() >= t => Some(format!("wall-clock budget of {:.1}s", t.as_secs_f64())),
            _ => None,
        }
    }
}

const BATCH: usize = 64;

fn check_degrees(alg: &Algebra<Rationals>) -> Result<()> {
    if !alg.known(2) {
        return Err(Error::Truncation("zero-divisor search needs the degree-2 piece".into()));
    }
    Ok(())
}

/// Pool-sparse pairs `(l1, l2)` of linear forms with `l1·l2 = 0`.
pub fn find_zero_divisor_pairs(alg: &Algebra<Rationals>, cfg: &SearchConfig) -> Result<PairOutcome> {
    check_degrees(alg)?;
    let modp = cfg.prefilter_prime.map(|p| reduce_mod_p(alg, p)).transpose()?;
    let mut stream = FormStream::new(alg.num_vars(), cfg)?;
    let budget = Budget::new(cfg);
    let mut out = PairOutcome::default();
    loop {
        if let Some(why) = budget.exceeded(out.forms_examined) {
            out.stopped_by = Some(why);
            break;
        }
        let room = BATCH.min(budget.max_forms - out.forms_examined);
        let batch: Vec<(usize, Vec<i64>)> =
            (0..room).map_while(|_| stream.next()).enumerate().map(|(i, v)| (out.forms_examined + i, v)).collect();
        if batch.is_empty() {
            out.exhausted = cfg.mode == SearchMode::ExhaustiveSparse;
            break;
        }
        out.forms_examined += batch.len();
        let found: Vec<Vec<ZeroDivisorPair>> = batch
            .par_iter()
            .map(|(index, v)| -> Result<Vec<ZeroDivisorPair>> {
                if let Some(a) = &modp {
                    if degree_one_kernel(a, &linear_form(a, v))?.is_zero() {
                        return Ok(Vec::new());
                    }
                }
                let ker = degree_one_kernel(alg, &linear_form(alg, v))?;
                Ok(sparse_vectors_in(&ker, &cfg.coefficient_pool, cfg.max_support, usize::MAX)
                    .into_iter()
                    .map(|l2| ZeroDivisorPair { index: *index, l1: v.clone(), l2 })
                    .collect())
            })
            .collect::<Result<_>>()?;
        out.pairs.extend(found.into_iter().flatten());
    }
    Ok(out)
}

fn scaled_string(alg: &Algebra<Rationals>, e: &Element<BigRational>) -> String {
    let ints = primitive_integer_vector(&e.coords);
    let coords = ints.into_iter().map(BigRational::from_integer).collect();
    alg.format(&Element { degree: e.degree, coords })
}

/// Non-linear minimal generators of `(0) : l`.
fn nonlinear_annihilator(alg: &Arc<Algebra<Rationals>>, l: &Element<BigRational>) -> Result<Vec<(Element<BigRational>, String)>> {
    let ann = Submodule::zero(alg, FreeModule::ring()).colon(l)?;
    Ok(ann.min_gen_elements().into_iter().filter(|g| g.degree >= 2).map(|g| {
        let s = scaled_string(alg, &g);
        (g, s)
    }).collect())
}

/// One candidate: derive `K1`, `K2` and certificates, then verify.
fn try_pair(
    rings: &Rings,
    template: &WitnessCerts,
    name: &str,
    index: usize,
    l1v: &[i64],
    l2v: &[i64],
    opts: &CertifyOptions,
) -> Result<Option<(Candidate, Witness, Report)>> {
    let alg = &rings.w;
    let names = alg.var_names();
    let (l1, l2) = (linear_form(alg.as_ref(), l1v), linear_form(alg.as_ref(), l2v));
    // (ii) with K generated in degree >= 2 needs one-dimensional linear annihilators
    if degree_one_kernel(alg.as_ref(), &l2)?.dim() != 1 {
        return Ok(None);
    }
    let k2 = nonlinear_annihilator(alg, &l1)?;
    let k1 = nonlinear_annihilator(alg, &l2)?;
    if k1.is_empty() || k2.is_empty() {
        return Ok(None);
    }
    let mut certs = template.clone();
    let gens_of = |k: &[(Element<BigRational>, String)]| k.iter().map(|(e, _)| e.clone()).collect::<Vec<_>>();
    let k1_ideal = ideal(alg, &gens_of(&k1))?;
    let k2_ideal = ideal(alg, &gens_of(&k2))?;
    // certificates for K matter only when an intersection is nonzero
    let needs = !k2_ideal.intersect(&ideal(alg, &[l2.clone()])?)?.is_zero()
        || !k1_ideal.intersect(&ideal(alg, &[l1.clone()])?)?.is_zero();
    if needs {
        certs.k1 = suggest_linear_quotients(&rings.ctx_w, &k1)?;
        certs.k2 = suggest_linear_quotients(&rings.ctx_w, &k2)?;
    }
    let w = Witness {
        name: format!("{name} #{index}"),
        algebra: rings.spec.clone(),
        perm: None,
        l1: form_string(names, l1v),
        l2: form_string(names, l2v),
        k1: k1.iter().map(|(_, s)| s.clone()).collect(),
        k2: k2.iter().map(|(_, s)| s.clone()).collect(),
        certs,
    };
    let report = verify_witness_in(&w, rings, opts)?;
    let score = report.checks.iter().filter(|c| c.required && c.status == Status::Pass).count();
    let cand = Candidate {
        index,
        l1: w.l1.clone(),
        l2: w.l2.clone(),
        k1: w.k1.clone(),
        k2: w.k2.clone(),
        score,
        certified: report.verdict.is_certified(),
    };
    Ok(Some((cand, w, report)))
}

/// Searches `W` (the algebra of `job`) for certified witnesses. Candidates
/// are verified without numeric cross-checks; results are in stream order.
pub fn search_witness(job: &SearchJob, progress: &mut dyn FnMut(&str)) -> Result<SearchOutcome> {
    let cfg = &job.config;
    let opts = CertifyOptions { numeric_cutoff: None, ..CertifyOptions::default() };
    let rings = Rings::prepare(&job.algebra, &job.certs, &opts)?;
    if let Some(c) = rings.checks.iter().find(|c| c.required && c.status == Status::Fail) {
        return Err(Error::Invalid(format!("ring certificate fails: {} ({})", c.id, c.evidence)));
    }
    let alg = rings.w.clone();
    check_degrees(&alg)?;
    let modp = cfg.prefilter_prime.map(|p| reduce_mod_p(&alg, p)).transpose()?;
    let name = job.algebra.describe();
    let mut stream = FormStream::new(alg.num_vars(), cfg)?;
    let budget = Budget::new(cfg);
    let mut out = SearchOutcome::default();
    let want = cfg.max_witnesses.unwrap_or(usize::MAX);
    loop {
        if out.witnesses.len() >= want {
            out.stopped_by = Some(format!("found {want} witness(es)"));
            break;
        }
        if let Some(why) = budget.exceeded(out.forms_examined) {
            out.stopped_by = Some(why);
            break;
        }
        let room = BATCH.min(budget.max_forms - out.forms_examined);
        let batch: Vec<(usize, Vec<i64>)> =
            (0..room).map_while(|_| stream.next()).enumerate().map(|(i, v)| (out.forms_examined + i, v)).collect();
        if batch.is_empty() {
            out.exhausted = cfg.mode == SearchMode::ExhaustiveSparse;
            break;
        }
        out.forms_examined += batch.len();
        type Found = (usize, Vec<(Candidate, Witness, Report)>);
        let results: Vec<Found> = batch
            .par_iter()
            .map(|(index, v)| -> Result<Found> {
                if let Some(a) = &modp {
                    if degree_one_kernel(a, &linear_form(a, v))?.is_zero() {
                        return Ok((0, Vec::new()));
                    }
                }
                let ker = degree_one_kernel(alg.as_ref(), &linear_form(alg.as_ref(), v))?;
                if ker.dim() != 1 {
                    let pairs = if ker.is_zero() { 0 } else { sparse_vectors_in(&ker, &cfg.coefficient_pool, cfg.max_support, usize::MAX).len() };
                    return Ok((pairs, Vec::new()));
                }
                let l2s = sparse_vectors_in(&ker, &cfg.coefficient_pool, cfg.max_support, usize::MAX);
                let mut hits = Vec::new();
                for l2 in &l2s {
                    if let Some(r) = try_pair(&rings, &job.certs, &name, *index, v, l2, &opts)? {
                        hits.push(r);
                    }
                }
                Ok((l2s.len(), hits))
            })
            .collect::<Result<_>>()?;
        for (pairs, hits) in results {
            out.pairs_found += pairs;
            for (cand, w, report) in hits {
                let certified = cand.certified;
                out.candidates.push(cand);
                if certified && out.witnesses.len() < want {
                    progress(&format!("certified: l1 = {}, l2 = {}", w.l1, w.l2));
                    out.witnesses.push(w);
                    out.reports.push(report);
                }
            }
        }
        if out.forms_examined % (BATCH * 64) == 0 {
            progress(&format!("{} forms, {} pairs, {} certified", out.forms_examined, out.pairs_found, out.witnesses.len()));
        }
    }
    out.seconds = budget.start.elapsed().as_secs_f64();
    Ok(out)
}

/// Convenience wrapper for a ring without ring-level certificates.
pub fn search_algebra(spec: &AlgebraSpec, cfg: &SearchConfig) -> Result<SearchOutcome> {
    let job = SearchJob { algebra: spec.clone(), certs: WitnessCerts::default(), config: cfg.clone() };
    search_witness(&job, &mut |_| {})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_presentation_strs;

    fn strs(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn cfg(pool: &[i64], support: usize) -> SearchConfig {
        SearchConfig { coefficient_pool: pool.to_vec(), max_support: support, max_witnesses: None, ..Default::default() }
    }

    #[test]
    fn exhaustive_stream_counts() {
        // supports of size 1 and 2 in 3 variables, pool {-1, 1}: x, y, z and x±y, x±z, y±z
        let mut s = FormStream::new(3, &cfg(&[-1, 1], 2)).unwrap();
        let mut all = Vec::new();
        while let Some(v) = s.next() {
            all.push(v);
        }
        assert_eq!(all.len(), 3 + 6);
        assert_eq!(all[0], vec![1, 0, 0]);
        assert!(all.contains(&vec![1, -1, 0]));
        assert!(!all.contains(&vec![-1, 1, 0]));
    }

    #[test]
    fn canonical_scaling() {
        let pool = [-1, 1, 2, 3, 6];
        assert!(is_canonical(&[1, 2], &pool));
        assert!(!is_canonical(&[2, 4], &pool));
        assert!(!is_canonical(&[-1, -2], &pool));
        // -x + 2y has no positive-lead multiple in the pool
        assert!(is_canonical(&[-1, 2], &pool));
        assert!(is_canonical(&[2, 3], &pool));
    }

    #[test]
    fn randomized_stream_is_reproducible() {
        let c = SearchConfig { mode: SearchMode::Randomized, seed: 7, ..cfg(&[-1, 1, 2], 3) };
        let take = |c: &SearchConfig| {
            let mut s = FormStream::new(10, c).unwrap();
            (0..50).map(|_| s.next().unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(take(&c), take(&c));
        assert_ne!(take(&c), take(&SearchConfig { seed: 8, ..c.clone() }));
    }

    #[test]
    fn dual_numbers_pair() {
        let a = build_presentation_strs(&strs(&["x"]), &strs(&["x^2"]), 3).unwrap();
        let out = find_zero_divisor_pairs(&a, &cfg(&[-1, 1], 1)).unwrap();
        assert_eq!(out.pairs, vec![ZeroDivisorPair { index: 0, l1: vec![1], l2: vec![1] }]);
        assert!(out.exhausted);
    }

    #[test]
    fn domain_has_no_pairs() {
        let a = build_presentation_strs(&strs(&["x", "y"]), &[], 3).unwrap();
        let out = find_zero_divisor_pairs(&a, &cfg(&[-1, 1, 2], 2)).unwrap();
        assert!(out.pairs.is_empty());
        assert!(out.exhausted);
        let p = find_zero_divisor_pairs(&a, &SearchConfig { prefilter_prime: Some(32003), ..cfg(&[-1, 1, 2], 2) }).unwrap();
        assert!(p.pairs.is_empty());
    }

    #[test]
    fn roos_pairs_include_known_witness() {
        let a = crate::constructions::build_builtin("roos").unwrap();
        let out = find_zero_divisor_pairs(&a, &cfg(&[-1, 1], 2)).unwrap();
        // x = (1,0,0,0), z = (0,0,1,0)
        assert!(out.pairs.iter().any(|p| p.l1 == vec![1, 0, -1, 0] && p.l2 == vec![1, 0, 1, 0]));
        assert!(out.pairs.iter().all(|p| {
            let prod = a.mul(&linear_form(&a, &p.l1), &linear_form(&a, &p.l2)).unwrap();
            a.is_zero(&prod)
        }));
    }

    #[test]
    fn budget_stops_cleanly() {
        let a = crate::constructions::build_builtin("roos").unwrap();
        let out = find_zero_divisor_pairs(&a, &SearchConfig { max_candidates: 3, ..cfg(&[-1, 1], 2) }).unwrap();
        assert_eq!(out.forms_examined, 3);
        assert!(!out.exhausted);
        assert!(out.stopped_by.is_some());
    }

    #[test]
    fn roos_search_certifies() {
        let t = Instant::now();
        let out = search_algebra(&AlgebraSpec::builtin("roos"), &SearchConfig { max_witnesses: Some(1), ..cfg(&[-1, 1], 2) }).unwrap();
        assert!(t.elapsed() < Duration::from_secs(1), "{:?}", t.elapsed());
        assert_eq!(out.witnesses.len(), 1);
        let w = &out.witnesses[0];
        let re = crate::certify::verify_witness(w, &CertifyOptions::default()).unwrap();
        assert!(re.verdict.is_certified(), "{}", re.to_text());
    }

    #[test]
    fn job_json_defaults() {
        let j = SearchJob::from_json(r#"{"algebra": {"kind": "builtin", "name": "roos"}, "config": {"max_support": 2}}"#).unwrap();
        assert_eq!(j.config.max_support, 2);
        assert_eq!(j.config.coefficient_pool, vec![-1, 1, 2, 3, 6]);
        assert_eq!(j.config.mode, SearchMode::ExhaustiveSparse);
    }
}
