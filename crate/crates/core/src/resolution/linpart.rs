//! Homology of the linear part of a minimal resolution.
//!
//! The linear part keeps, for each generator `e` of `F_i` of degree `g`, only the
//! components of `d(e)` on generators of `F_{i-1}` of degree `g - 1`. It splits
//! into strands `C^(s)` spanned by generators with `g - i = s`. The lowest strand
//! of a module generated in degree `d` is computable on its own, and its homology
//! is a direct summand of `H(lin F)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::graded::GradedModule;
use super::resolve::{kernel_with_prefilter, resolve, Resolution, ResolveOptions};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::galgebra::{Algebra, Element, FreeMap, FreeModule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LinPartMethod {
    /// Every strand, from a full resolution.
    Full,
    /// Only the lowest strand, a direct summand of the full homology.
    LinearStrand,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LinPartReport {
    /// `dim H_i(lin F)` for `i = 0..=cutoff` over the computed degrees (entry 0 unused).
    pub homology_dims: Vec<usize>,
    /// Per `i`, nonzero `dim H_i(lin F)_t` by internal degree `t`.
    pub by_degree: Vec<BTreeMap<usize, usize>>,
    /// Per `i`, the last internal degree examined (`None` if all degrees were).
    pub examined_through: Vec<Option<usize>>,
    /// Largest `i ≤ cutoff` with nonzero homology, or 0.
    pub lind_lower_bound: usize,
    pub method: LinPartMethod,
    /// For [`LinPartMethod::LinearStrand`], the strand's ranks `β_{i,i+d}`.
    pub strand_ranks: Vec<usize>,
}

impl LinPartReport {
    pub fn nonzero_through(&self, c: usize) -> bool {
        (1..=c).all(|i| self.homology_dims.get(i).is_some_and(|&h| h > 0))
    }
    pub fn zero_through(&self, c: usize) -> bool {
        (1..=c).all(|i| self.homology_dims.get(i).copied().unwrap_or(0) == 0)
    }
}

/// Keeps the components of `d(e_j)` on generators of degree `g_j - 1`.
fn linear_component<K: Field>(alg: &Algebra<K>, d: &FreeMap<K::Elem>) -> FreeMap<K::Elem> {
    let k = alg.field();
    let columns = d
        .columns
        .iter()
        .map(|c| {
            let mut v = c.coords.clone();
            for b in d.target.blocks(alg, c.degree) {
                if d.target.gen_degrees[b.generator] + 1 != c.degree {
                    for x in &mut v[b.offset..b.offset + b.len] {
                        *x = k.zero();
                    }
                }
            }
            Element { degree: c.degree, coords: v }
        })
        .collect();
    FreeMap { source: d.source.clone(), target: d.target.clone(), columns }
}

/// `dim H_i` at degree `t` for the complex `... → C_{i+1} → C_i → C_{i-1}`.
fn homology_at<K: Field>(
    alg: &Algebra<K>,
    d_i: &FreeMap<K::Elem>,
    d_next: &FreeMap<K::Elem>,
    t: usize,
    prefilter: bool,
) -> usize {
    let n = d_i.source.dim(alg, t);
    if n == 0 {
        return 0;
    }
    let ker = if d_i.target.rank() == 0 {
        n
    } else {
        kernel_with_prefilter(&d_i.matrix_at(alg, t), prefilter).dim()
    };
    if ker == 0 {
        return 0;
    }
    let rank = if d_next.source.dim(alg, t) == 0 { 0 } else { d_next.matrix_at(alg, t).rank() };
    ker - rank
}

fn last_degree<K: Field>(alg: &Algebra<K>, f: &FreeModule) -> Option<usize> {
    if f.rank() == 0 {
        None
    } else {
        Some(f.top(alg))
    }
}

fn report_from_maps<K: Field>(
    alg: &Algebra<K>,
    maps: &[FreeMap<K::Elem>],
    limits: &[Option<usize>],
    cutoff: usize,
    prefilter: bool,
    method: LinPartMethod,
) -> LinPartReport {
    let mut homology_dims = vec![0; cutoff + 1];
    let mut by_degree = vec![BTreeMap::new(); cutoff + 1];
    let mut examined = vec![None; cutoff + 1];
    for i in 1..=cutoff.min(maps.len().saturating_sub(2)) {
        let src = &maps[i].source;
        let Some(hi) = last_degree(alg, src) else { continue };
        let lo = src.gen_degrees.iter().copied().min().unwrap_or(0);
        let lim = limits[i];
        let end = lim.map_or(hi, |l| l.min(hi));
        examined[i] = if lim.is_none() && alg.is_artinian() { None } else { Some(end) };
        for t in lo..=end {
            let h = homology_at(alg, &maps[i], &maps[i + 1], t, prefilter);
            if h > 0 {
                by_degree[i].insert(t, h);
                homology_dims[i] += h;
            }
        }
    }
    let lind_lower_bound = (1..=cutoff).rev().find(|&i| homology_dims[i] > 0).unwrap_or(0);
    LinPartReport { homology_dims, by_degree, examined_through: examined, lind_lower_bound, method, strand_ranks: Vec::new() }
}

/// Homology of the linear part from a resolution computed through `F_{cutoff+1}`.
pub fn linear_part_from_resolution<K: Field>(r: &Resolution<K>, cutoff: usize, prefilter: bool) -> Result<LinPartReport> {
    if r.len() < cutoff + 2 {
        return Err(Error::Invalid(format!("resolution has {} modules; need {}", r.len(), cutoff + 2)));
    }
    let alg = r.algebra();
    let maps: Vec<_> = r.differentials.iter().map(|d| linear_component(alg, d)).collect();
    // a degree-t piece of lin F_{i-1}, lin F_i, lin F_{i+1} is complete when all three generator lists are
    let mut limits = vec![None; cutoff + 1];
    for (i, lim) in limits.iter_mut().enumerate().skip(1) {
        let mut l = None;
        for j in i - 1..=i + 1 {
            l = match (l, r.gens_exact_through[j]) {
                (Some(a), Some(b)) => Some(usize::min(a, b)),
                (a, None) => a,
                (None, b) => b,
            };
        }
        if !alg.is_artinian() {
            for j in i - 1..=i + 1 {
                if let Some(top) = last_degree(alg, &r.differentials[j].source) {
                    l = Some(l.map_or(top, |x: usize| x.min(top)));
                }
            }
        }
        *lim = l;
    }
    Ok(report_from_maps(alg, &maps, &limits, cutoff, prefilter, LinPartMethod::Full))
}

/// The lowest linear strand of the resolution of `M/N`, through `F_{cutoff}`.
///
/// With `d` the lowest generator degree, `F_i` has `β_{i,i+d}` strand generators,
/// and these are a basis of `ker(A_1 ⊗ k^{β_{i-1,i-1+d}} → A_2 ⊗ k^{β_{i-2,i-2+d}})`
/// (for `i = 1`, the target is `(M/N)_{d+1}`).
pub fn linear_strand<K: Field>(
    module: &GradedModule<K>,
    cutoff: usize,
    opts: &ResolveOptions,
) -> Result<(usize, Vec<FreeMap<K::Elem>>)> {
    let alg: &Arc<Algebra<K>> = module.algebra();
    let gens = module.min_gen_elements();
    let Some(d) = gens.first().map(|g| g.degree) else {
        return Ok((0, Vec::new()));
    };
    let first: Vec<Element<K::Elem>> = gens.into_iter().filter(|g| g.degree == d).collect();
    let mut maps = vec![FreeMap {
        source: FreeModule::new(vec![d; first.len()]),
        target: module.ambient().clone(),
        columns: first,
    }];
    for i in 1..=cutoff {
        let prev = maps.last().expect("nonempty");
        let t = i + d;
        if prev.source.rank() == 0 {
            maps.push(FreeMap { source: FreeModule::new(Vec::new()), target: prev.source.clone(), columns: Vec::new() });
            continue;
        }
        if !alg.is_artinian() && alg.top() < 2 {
            return Err(Error::Truncation("the linear strand needs A_2".into()));
        }
        if i == 1 && !module.is_exact() && module.top() < t {
            return Err(Error::Truncation(format!("module known only through degree {}", module.top())));
        }
        let n = prev.source.dim(alg, t);
        if n > opts.max_piece {
            return Err(Error::Budget(format!("linear strand piece of dimension {n}")));
        }
        let rows = prev.target.dim(alg, t);
        if n.saturating_mul(rows) > opts.max_cells {
            return Err(Error::Budget(format!("linear strand matrix {rows}×{n}")));
        }
        let mut m = prev.matrix_at(alg, t);
        if i == 1 && t <= module.top() {
            let rel = module.relations().piece(t).expect("known degree");
            let k = alg.field();
            let cols: Vec<Vec<K::Elem>> = (0..m.cols()).map(|c| rel.quotient_coords(&m.column(c))).collect();
            let rows = rel.ambient() - rel.dim();
            let mut q = crate::exactla::Mat::zeros(k, rows, cols.len());
            for (c, v) in cols.into_iter().enumerate() {
                for (r, x) in v.into_iter().enumerate() {
                    q.set(r, c, x);
                }
            }
            m = q;
        }
        let z = kernel_with_prefilter(&m, opts.prefilter);
        if z.dim() > opts.max_rank {
            return Err(Error::Budget(format!("linear strand rank {} at step {i}", z.dim())));
        }
        let columns: Vec<Element<K::Elem>> =
            z.basis().iter().map(|v| Element { degree: t, coords: v.clone() }).collect();
        maps.push(FreeMap { source: FreeModule::new(vec![t; columns.len()]), target: prev.source.clone(), columns });
    }
    Ok((d, maps))
}

/// `H_i(lin F)` for `1 ≤ i ≤ cutoff`: from the full resolution when it fits the
/// budget, otherwise from the lowest linear strand.
pub fn linear_part_homology<K: Field>(
    module: &GradedModule<K>,
    cutoff: usize,
    opts: &ResolveOptions,
) -> Result<LinPartReport> {
    match resolve(module, cutoff + 1, opts) {
        Ok(r) => linear_part_from_resolution(&r, cutoff, opts.prefilter),
        Err(Error::Budget(_)) => linear_part_strand(module, cutoff, opts),
        Err(e) => Err(e),
    }
}

/// `H_i` of the lowest linear strand only.
pub fn linear_part_strand<K: Field>(module: &GradedModule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<LinPartReport> {
    let alg = module.algebra();
    let (_, maps) = linear_strand(module, cutoff + 1, opts)?;
    if maps.is_empty() {
        return Ok(LinPartReport {
            homology_dims: vec![0; cutoff + 1],
            by_degree: vec![BTreeMap::new(); cutoff + 1],
            examined_through: vec![None; cutoff + 1],
            lind_lower_bound: 0,
            method: LinPartMethod::LinearStrand,
            strand_ranks: Vec::new(),
        });
    }
    let limits: Vec<Option<usize>> = (0..=cutoff)
        .map(|i| {
            if alg.is_artinian() {
                None
            } else {
                [i.saturating_sub(1), i, i + 1]
                    .iter()
                    .filter_map(|&j| last_degree(alg, &maps[j].source))
                    .min()
            }
        })
        .collect();
    let mut rep = report_from_maps(alg, &maps, &limits, cutoff, opts.prefilter, LinPartMethod::LinearStrand);
    rep.strand_ranks = maps.iter().map(|m| m.source.rank()).collect();
    Ok(rep)
}
