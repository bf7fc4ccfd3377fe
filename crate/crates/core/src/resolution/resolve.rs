//! Minimal graded free resolutions, degree by degree.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::graded::GradedModule;
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat, PrimeField, Subspace};
use crate::galgebra::{Algebra, Element, FreeMap, FreeModule, Submodule};

/// Limits on the size of a resolution computation.
#[derive(Clone, Copy, Debug)]
pub struct ResolveOptions {
    /// Largest total rank allowed for a single free module `F_i`.
    pub max_rank: usize,
    /// Largest `dim F_{i,t}` for which a kernel is computed.
    pub max_piece: usize,
    /// Largest number of entries in one dense matrix.
    pub max_cells: usize,
    /// Use a modular rank computation to skip provably zero kernels over Q.
    pub prefilter: bool,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { max_rank: 4000, max_piece: 6000, max_cells: 2_500_000, prefilter: true }
    }
}

/// A computed piece of the minimal free resolution `... → F_1 → F_0 → M → 0`.
#[derive(Clone, Debug)]
pub struct Resolution<K: Field> {
    alg: Arc<Algebra<K>>,
    /// `differentials[0]: F_0 → G`, `differentials[i]: F_i → F_{i-1}`.
    pub differentials: Vec<FreeMap<K::Elem>>,
    /// Internal degree through which the generators of `F_i` are all found (`None`: all degrees).
    pub gens_exact_through: Vec<Option<usize>>,
    /// `Z_i = ker d_i` for `i < differentials.len() - 1`.
    pub syzygies: Vec<Submodule<K>>,
    pub module_hilbert: Vec<usize>,
    pub module_exact: bool,
    /// Whether `dim F_{i,t} = dim Z_{i,t} + dim Z_{i-1,t}` held at every computed step and degree.
    pub euler_ok: bool,
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Kernel of a matrix, with a modular full-rank shortcut over Q.
pub(crate) fn kernel_with_prefilter<K: Field>(m: &Mat<K>, prefilter: bool) -> Subspace<K> {
    let k = m.field();
    if m.cols() == 0 {
        return Subspace::zero(k, 0);
    }
    if prefilter && k.is_exact_rational() && m.rows() >= m.cols() {
        let p = PrimeField::default();
        let rows: Option<Vec<Vec<u64>>> = (0..m.rows())
            .map(|r| m.row(r).iter().map(|x| p.from_rational(&k.to_rational(x))).collect())
            .collect();
        if let Some(rows) = rows {
            let (_, piv) = p.rref_rows(rows, m.cols());
            // rank over Q is at least the rank mod p
            if piv.len() == m.cols() {
                return Subspace::zero(k, m.cols());
            }
        }
    }
    m.kernel()
}

/// `b · col_j` for every basis element `b` of `A_e`, for each generator `j`.
fn orbits<K: Field>(
    alg: &Algebra<K>,
    target: &FreeModule,
    columns: &[Element<K::Elem>],
    degrees: &[usize],
    top: usize,
) -> Vec<Vec<Vec<Vec<K::Elem>>>> {
    columns
        .par_iter()
        .zip(degrees.par_iter())
        .map(|(c, &g)| if g > top { Vec::new() } else { target.orbit(alg, c, top - g) })
        .collect()
}

/// Degree-`t` matrix of `F → G/N` assembled from precomputed orbits.
fn assemble<K: Field>(
    alg: &Algebra<K>,
    source: &FreeModule,
    rows: usize,
    orb: &[Vec<Vec<Vec<K::Elem>>>],
    t: usize,
    rel: Option<&Subspace<K>>,
) -> Mat<K> {
    let k = alg.field();
    let blocks = source.blocks(alg, t);
    let cols: usize = blocks.iter().map(|b| b.len).sum();
    let nrows = rel.map_or(rows, |n| n.ambient() - n.dim());
    let mut m = Mat::zeros(k, nrows, cols);
    for b in blocks {
        let Some(level) = orb[b.generator].get(b.degree) else { continue };
        for (kk, v) in level.iter().enumerate() {
            let v = match rel {
                Some(n) => n.quotient_coords(v),
                None => v.clone(),
            };
            for (r, x) in v.into_iter().enumerate() {
                if !k.is_zero(&x) {
                    m.set(r, b.offset + kk, x);
                }
            }
        }
    }
    m
}

impl<K: Field> Resolution<K> {
    pub fn algebra(&self) -> &Arc<Algebra<K>> {
        &self.alg
    }

    /// Number of computed free modules (`F_0 .. F_{len-1}`).
    pub fn len(&self) -> usize {
        self.differentials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.differentials.is_empty()
    }

    pub fn free_module(&self, i: usize) -> &FreeModule {
        &self.differentials[i].source
    }

    /// Graded Betti numbers with exactness bookkeeping.
    pub fn betti(&self) -> BettiTable {
        let mut betti = Vec::new();
        for d in &self.differentials {
            let mut row = BTreeMap::new();
            for &g in &d.source.gen_degrees {
                *row.entry(g).or_insert(0) += 1;
            }
            betti.push(row);
        }
        BettiTable {
            betti,
            exact_through: self.gens_exact_through.clone(),
            hom_cutoff: self.differentials.len().saturating_sub(1),
        }
    }
}

/// Resolves `M/N` through `F_cutoff`.
pub fn resolve<K: Field>(module: &GradedModule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<Resolution<K>> {
    let alg = module.algebra().clone();
    let target0 = module.ambient().clone();
    let module_exact = module.is_exact() && alg.is_artinian();
    let module_top = module.top();

    let gens0 = module.min_gen_elements();
    let mut known: Option<usize> = if module_exact { None } else { Some(module_top) };
    let mut differentials = Vec::new();
    let mut gens_exact_through = Vec::new();
    let mut syzygies: Vec<Submodule<K>> = Vec::new();
    let mut euler_ok = true;

    let mut gens = gens0;
    let mut target = target0.clone();
    // Z_{i-1} as dims per degree, for the rank-nullity check
    let mut prev_dims: Vec<usize> = module.hilbert();
    for i in 0..=cutoff {
        let degrees: Vec<usize> = gens.iter().map(|g| g.degree).collect();
        if degrees.len() > opts.max_rank {
            return Err(Error::Budget(format!("F_{i} would have rank {} (limit {})", degrees.len(), opts.max_rank)));
        }
        let source = FreeModule::new(degrees.clone());
        let map = FreeMap { source: source.clone(), target: target.clone(), columns: gens.clone() };
        differentials.push(map);
        gens_exact_through.push(known);
        if i == cutoff || source.rank() == 0 {
            if source.rank() == 0 {
                // the resolution has ended: every later module is zero, exactly through `known`
                for _ in i + 1..=cutoff {
                    differentials.push(FreeMap {
                        source: FreeModule::new(Vec::new()),
                        target: FreeModule::new(Vec::new()),
                        columns: Vec::new(),
                    });
                    gens_exact_through.push(known);
                }
            }
            break;
        }

        // range where Z_i is computed
        let tgt_top = if target.rank() == 0 { 0 } else { target.top(&alg) };
        let src_top = source.top(&alg);
        let step_known = if module_exact { None } else { min_opt(known, Some(src_top.min(tgt_top))) };
        let top = step_known.unwrap_or(src_top);
        for t in 0..=top {
            let n = source.dim(&alg, t);
            if n > opts.max_piece {
                return Err(Error::Budget(format!("dim F_{{{i},{t}}} = {n} exceeds {}", opts.max_piece)));
            }
            let rows = if target.rank() == 0 { 0 } else { target.dim(&alg, t) };
            if n.saturating_mul(rows) > opts.max_cells {
                return Err(Error::Budget(format!("degree-{t} matrix of d_{i} is {rows}×{n} (limit {} entries)", opts.max_cells)));
            }
        }
        // the orbit cache stores dim A_e vectors of F_{i-1, g+e} per generator
        let cached: usize = degrees
            .iter()
            .filter(|&&g| g <= top)
            .map(|&g| (0..=top - g).map(|e| alg.dim(e).saturating_mul(target.dim(&alg, g + e))).sum::<usize>())
            .fold(0usize, |a, b| a.saturating_add(b));
        if cached > opts.max_cells.saturating_mul(4) {
            return Err(Error::Budget(format!("orbit cache for d_{i} needs {cached} entries")));
        }
        let orb = orbits(&alg, &target, &gens, &degrees, top);
        let pieces: Vec<Subspace<K>> = (0..=top)
            .into_par_iter()
            .map(|t| {
                let rows = if target.rank() == 0 { 0 } else { target.dim(&alg, t) };
                let rel = if i == 0 && t <= module_top { Some(module.relation_piece(t)) } else { None };
                let m = assemble(&alg, &source, rows, &orb, t, rel);
                kernel_with_prefilter(&m, opts.prefilter)
            })
            .collect();
        for (t, z) in pieces.iter().enumerate() {
            let image = z.ambient() - z.dim();
            let expected = prev_dims.get(t).copied().unwrap_or(0);
            if image != expected {
                euler_ok = false;
            }
        }
        prev_dims = pieces.iter().map(|z| z.dim()).collect();
        if i < cutoff {
            // the lowest nonzero piece consists of generators
            let lowest = prev_dims.iter().copied().find(|&d| d > 0).unwrap_or(0);
            if lowest > opts.max_rank {
                return Err(Error::Budget(format!("F_{} would have rank at least {lowest} (limit {})", i + 1, opts.max_rank)));
            }
            // minimal generators reduce x_j·Z_{t-1} inside F_{i,t}
            let cost: usize = (1..prev_dims.len())
                .map(|t| alg.num_vars().saturating_mul(prev_dims[t - 1]).saturating_mul(source.dim(&alg, t)))
                .fold(0usize, |a, b| a.saturating_add(b));
            if cost > opts.max_cells.saturating_mul(20) {
                return Err(Error::Budget(format!("minimal generators of Z_{} need about {cost} reductions", i + 1)));
            }
        }
        let z =Submodule::from_pieces(alg.clone(), source, pieces, step_known.is_none())?;
        gens = z.min_gen_elements();
        syzygies.push(z);
        known = step_known;
        target = differentials.last().expect("pushed").source.clone();
    }
    Ok(Resolution {
        alg,
        differentials,
        gens_exact_through,
        syzygies,
        module_hilbert: module.hilbert(),
        module_exact,
        euler_ok,
    })
}

/// First syzygy module `Ω_1(M/N) = ker(F_0 → M/N)` as a submodule of `F_0`.
pub fn syzygy<K: Field>(module: &GradedModule<K>, opts: &ResolveOptions) -> Result<GradedModule<K>> {
    if !module.is_exact() && module.top() == 0 {
        return Err(Error::Truncation("no headroom above degree 0 for a syzygy".into()));
    }
    let r = resolve(module, 1, opts)?;
    match r.syzygies.into_iter().next() {
        Some(z) => Ok(GradedModule::submodule(z)),
        None => {
            let alg = module.algebra();
            Ok(GradedModule::submodule(Submodule::zero(alg, FreeModule::new(Vec::new()))))
        }
    }
}

/// `β_{i,j}` for `i ≤ hom_cutoff`; entries with `j > exact_through[i]` are unknown.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub betti: Vec<BTreeMap<usize, usize>>,
    pub exact_through: Vec<Option<usize>>,
    pub hom_cutoff: usize,
}

#[derive(Serialize, Deserialize)]
struct BettiJson {
    betti: BTreeMap<String, usize>,
    exact_through: Vec<Option<usize>>,
    hom_cutoff: usize,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.betti.get(i).and_then(|r| r.get(&j)).copied().unwrap_or(0)
    }

    pub fn is_exact(&self, i: usize, j: usize) -> bool {
        match self.exact_through.get(i) {
            Some(None) => true,
            Some(Some(t)) => j <= *t,
            None => false,
        }
    }

    /// `β_i = Σ_j β_{i,j}` for each `i`.
    pub fn totals(&self) -> Vec<usize> {
        self.betti.iter().map(|r| r.values().sum()).collect()
    }

    /// `max(j - i)` over nonzero entries (`None` for the zero module).
    pub fn regularity(&self) -> Option<i64> {
        self.betti
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.keys().map(move |&j| j as i64 - i as i64))
            .max()
    }

    /// `t_i = max{j : β_{i,j} ≠ 0}`.
    pub fn t(&self, i: usize) -> Option<usize> {
        self.betti.get(i).and_then(|r| r.keys().next_back().copied())
    }

    /// Whether every nonzero `β_{i,j}` has `j = i + d`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.betti.iter().enumerate().all(|(i, r)| r.keys().all(|&j| j == i + d))
    }

    /// Whether every entry is exact.
    pub fn all_exact(&self) -> bool {
        self.exact_through.iter().all(|e| e.is_none())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut betti = BTreeMap::new();
        for (i, r) in self.betti.iter().enumerate() {
            for (j, c) in r {
                betti.insert(format!("{i},{j}"), *c);
            }
        }
        serde_json::to_value(BettiJson { betti, exact_through: self.exact_through.clone(), hom_cutoff: self.hom_cutoff })
            .expect("betti table serializes")
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows: Vec<i64> = Vec::new();
        for (i, r) in self.betti.iter().enumerate() {
            for &j in r.keys() {
                rows.push(j as i64 - i as i64);
            }
        }
        let (lo, hi) = match (rows.iter().min(), rows.iter().max()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => (0, 0),
        };
        let cols = self.betti.len();
        let cell = |s: String| format!("{s:>6}");
        let mut head = String::from("       ");
        for i in 0..cols {
            head.push_str(&cell(i.to_string()));
        }
        writeln!(f, "{head}")?;
        let mut tot = String::from("total: ");
        for t in self.totals() {
            tot.push_str(&cell(t.to_string()));
        }
        writeln!(f, "{tot}")?;
        for r in lo..=hi {
            let mut line = format!("{r:>5}: ");
            for i in 0..cols {
                let j = i as i64 + r;
                let s = if j < 0 {
                    " ".to_string()
                } else if !self.is_exact(i, j as usize) {
                    ".".to_string()
                } else {
                    match self.get(i, j as usize) {
                        0 => "-".to_string(),
                        c => c.to_string(),
                    }
                };
                line.push_str(&cell(s));
            }
            writeln!(f, "{}", line.trim_end())?;
        }
        Ok(())
    }
}

/// `Σ_j β_{i,j}` for `i ≤ cutoff`.
pub fn poincare_partial<K: Field>(module: &GradedModule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<Vec<usize>> {
    Ok(resolve(module, cutoff, opts)?.betti().totals())
}

/// `max(j - i)` over the exact part of the Betti table through `cutoff`.
pub fn regularity_upto<K: Field>(module: &GradedModule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<Option<i64>> {
    Ok(resolve(module, cutoff, opts)?.betti().regularity())
}
