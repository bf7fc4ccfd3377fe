//! Numeric checks of Betti splittings and of direct-summand behaviour of Tor.

use serde::{Deserialize, Serialize};

use super::graded::GradedModule;
use super::resolve::{resolve, BettiTable, ResolveOptions};
use crate::error::{Error, Result};
use crate::exactla::Field;
use crate::galgebra::Submodule;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplittingRow {
    pub i: usize,
    pub beta_m: usize,
    pub beta_m1: usize,
    pub beta_m2: usize,
    /// `β_{i-1}(M1 ∩ M2)`, 0 for `i = 0`.
    pub beta_intersection_prev: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplittingReport {
    pub rows: Vec<SplittingRow>,
    /// The graded identity `β_{i,j}(M) = β_{i,j}(M1) + β_{i,j}(M2) + β_{i-1,j}(M1 ∩ M2)` on exact entries.
    pub graded_holds: bool,
    pub holds: bool,
}

fn table<K: Field>(m: &Submodule<K>, cutoff: usize, opts: &ResolveOptions) -> Result<BettiTable> {
    Ok(resolve(&GradedModule::submodule(m.clone()), cutoff, opts)?.betti())
}

fn graded_sum_matches(m: &BettiTable, parts: &[(&BettiTable, usize)], cutoff: usize) -> bool {
    // parts: (table, homological shift)
    for i in 0..=cutoff {
        let mut js: Vec<usize> = m.betti.get(i).map(|r| r.keys().copied().collect()).unwrap_or_default();
        for (t, s) in parts {
            if i >= *s {
                if let Some(r) = t.betti.get(i - s) {
                    js.extend(r.keys().copied());
                }
            }
        }
        js.sort_unstable();
        js.dedup();
        for j in js {
            let exact = m.is_exact(i, j) && parts.iter().all(|(t, s)| i < *s || t.is_exact(i - s, j));
            if !exact {
                continue;
            }
            let rhs: usize = parts.iter().filter(|(_, s)| i >= *s).map(|(t, s)| t.get(i - s, j)).sum();
            if m.get(i, j) != rhs {
                return false;
            }
        }
    }
    true
}

/// Evaluates `β_i(M) = β_i(M1) + β_i(M2) + β_{i-1}(M1 ∩ M2)` for `i ≤ cutoff`.
pub fn betti_splitting_numeric<K: Field>(
    m: &Submodule<K>,
    m1: &Submodule<K>,
    m2: &Submodule<K>,
    cutoff: usize,
    opts: &ResolveOptions,
) -> Result<SplittingReport> {
    if !m1.sum(m2)?.equals(m)? {
        return Err(Error::Invalid("M1 + M2 differs from M".into()));
    }
    let cap = m1.intersect(m2)?;
    let tm = table(m, cutoff, opts)?;
    let t1 = table(m1, cutoff, opts)?;
    let t2 = table(m2, cutoff, opts)?;
    let tc = table(&cap, cutoff.saturating_sub(1), opts)?;
    let (b, b1, b2, bc) = (tm.totals(), t1.totals(), t2.totals(), tc.totals());
    let get = |v: &Vec<usize>, i: usize| v.get(i).copied().unwrap_or(0);
    let rows: Vec<SplittingRow> = (0..=cutoff)
        .map(|i| {
            let prev = if i == 0 { 0 } else { get(&bc, i - 1) };
            let row = SplittingRow {
                i,
                beta_m: get(&b, i),
                beta_m1: get(&b1, i),
                beta_m2: get(&b2, i),
                beta_intersection_prev: prev,
                holds: false,
            };
            SplittingRow { holds: row.beta_m == row.beta_m1 + row.beta_m2 + prev, ..row }
        })
        .collect();
    let graded_holds = graded_sum_matches(&tm, &[(&t1, 0), (&t2, 0), (&tc, 1)], cutoff);
    let holds = rows.iter().all(|r| r.holds) && graded_holds;
    Ok(SplittingReport { rows, graded_holds, holds })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SummandRow {
    pub i: usize,
    pub beta_u: usize,
    pub beta_sub: usize,
    pub beta_quotient: usize,
    pub holds: bool,
}

/// Compares `β_i(U)` with `β_i(Y) + β_i(U/Y)` for `Y ⊆ U`; equality for all `i`
/// is forced whenever `Tor(k, Y) → Tor(k, U)` is injective.
pub fn summand_betti_check<K: Field>(
    u: &Submodule<K>,
    y: &Submodule<K>,
    cutoff: usize,
    opts: &ResolveOptions,
) -> Result<Vec<SummandRow>> {
    let bu = table(u, cutoff, opts)?.totals();
    let by = table(y, cutoff, opts)?.totals();
    let bq = resolve(&GradedModule::quotient(u, y)?, cutoff, opts)?.betti().totals();
    let get = |v: &Vec<usize>, i: usize| v.get(i).copied().unwrap_or(0);
    Ok((0..=cutoff)
        .map(|i| {
            let (a, b, c) = (get(&bu, i), get(&by, i), get(&bq, i));
            SummandRow { i, beta_u: a, beta_sub: b, beta_quotient: c, holds: a == b + c }
        })
        .collect())
}
