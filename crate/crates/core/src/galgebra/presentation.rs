//! Quotients of polynomial rings by homogeneous ideals, degree by degree.
//!
//! Rows are kept sparse and reduced; columns are products `x_i * b` of a
//! variable with a basis element of the previous degree.

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::algebra::{Algebra, AlgebraParts, SparseCols, SparseVec};
use super::poly::{degrevlex_cmp, monomial_string, Exponent, Poly};
use crate::error::{Error, Result};
use crate::exactla::Rationals;

type Row = BTreeMap<usize, BigRational>;

/// Sparse reduced echelon form over monomial columns; smaller column = larger monomial.
struct SparseEchelon {
    rows: HashMap<usize, Row>,
}

impl SparseEchelon {
    fn new() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }

    fn insert(&mut self, mut v: Row) {
        let mut cursor = 0usize;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, x)) = next else { break };
            let row = &self.rows[&c];
            for (j, a) in row {
                let e = v.entry(*j).or_insert_with(BigRational::zero);
                *e -= &x * a;
                if e.is_zero() {
                    v.remove(j);
                }
            }
            cursor = c + 1;
        }
        let Some((&p, lead)) = v.iter().next() else { return };
        let inv = lead.recip();
        if !inv.is_one() {
            for x in v.values_mut() {
                *x *= &inv;
            }
        }
        self.rows.insert(p, v);
    }

    /// Back-substitutes so that no row contains another row's pivot.
    fn interreduce(&mut self) {
        let mut pivots: Vec<usize> = self.rows.keys().copied().collect();
        pivots.sort_unstable_by(|a, b| b.cmp(a));
        for &p in &pivots {
            let mut row = self.rows.remove(&p).expect("pivot row");
            let hits: Vec<(usize, BigRational)> =
                row.iter().filter(|(c, _)| **c != p && self.rows.contains_key(c)).map(|(c, x)| (*c, x.clone())).collect();
            for (c, x) in hits {
                let other = &self.rows[&c];
                for (j, a) in other {
                    let e = row.entry(*j).or_insert_with(BigRational::zero);
                    *e -= &x * a;
                    if e.is_zero() {
                        row.remove(j);
                    }
                }
            }
            self.rows.insert(p, row);
        }
    }
}

/// Builds `Q[names]/(relations)`, exact if some piece vanishes by degree `cap`,
/// otherwise truncated at `cap`.
///
/// `R_d` is computed as `R_{d-1} ⊗ V` modulo the commutators
/// `x_i ⊗ x_j b - x_j ⊗ x_i b` (`b` in a basis of `R_{d-2}`) and the
/// degree-`d` relations, so the work per degree scales with `dim R_{d-1} · n`
/// rather than with the number of monomials. Every basis element is the image
/// of a monomial, which serves as its label; columns are ordered by that
/// monomial, largest first, so larger monomials are eliminated first.
pub fn build_from_presentation(names: &[String], relations: &[Poly], cap: usize) -> Result<Algebra<Rationals>> {
    if cap < 1 {
        return Err(Error::Invalid("truncation degree must be at least 1".into()));
    }
    let n = names.len();
    let mut by_degree: BTreeMap<usize, Vec<&Poly>> = BTreeMap::new();
    for r in relations {
        if r.is_zero() {
            continue;
        }
        let d = r.homogeneous_degree().ok_or_else(|| Error::NotHomogeneous(format!("{r:?}")))? as usize;
        if d < 2 {
            return Err(Error::Invalid("relations must have degree at least 2".into()));
        }
        if r.terms.keys().any(|e| e.len() != n) {
            return Err(Error::Invalid("relation in the wrong number of variables".into()));
        }
        by_degree.entry(d).or_default().push(r);
    }
    if n == 0 {
        return Algebra::from_parts(AlgebraParts {
            field: Rationals,
            names: Vec::new(),
            dims: vec![1],
            artinian: true,
            mul: Vec::new(),
            section: vec![Vec::new()],
            labels: vec![vec!["1".into()]],
        });
    }

    let unit = |i: usize| {
        let mut e = vec![0u32; n];
        e[i] = 1;
        e
    };
    let mut dims = vec![1usize, n];
    let mut labels = vec![vec!["1".to_string()], names.to_vec()];
    let mut section: Vec<Vec<Vec<(usize, SparseVec<BigRational>)>>> =
        vec![Vec::new(), (0..n).map(|i| vec![(i, vec![(0, BigRational::one())])]).collect()];
    let mut mul: Vec<Vec<SparseCols<BigRational>>> =
        vec![(0..n).map(|i| SparseCols { rows: n, cols: vec![vec![(i, BigRational::one())]] }).collect()];
    // monomial represented by each basis element, per degree
    let mut basis_monos: Vec<Vec<Exponent>> = vec![vec![vec![0; n]], (0..n).map(unit).collect()];
    let mut artinian = false;

    for d in 2..=cap {
        let prev = dims[d - 1];
        // column (b, i) stands for x_i * b_{d-1}; order by monomial, largest first
        let mut order: Vec<(usize, usize)> = (0..prev).flat_map(|b| (0..n).map(move |i| (b, i))).collect();
        let mono_of = |&(b, i): &(usize, usize)| {
            let mut e = basis_monos[d - 1][b].clone();
            e[i] += 1;
            e
        };
        order.sort_by(|p, q| degrevlex_cmp(&mono_of(q), &mono_of(p)).then(p.1.cmp(&q.1)).then(p.0.cmp(&q.0)));
        let mut pos = vec![0usize; prev * n];
        for (k, &(b, i)) in order.iter().enumerate() {
            pos[b * n + i] = k;
        }
        let col = |b: usize, i: usize| pos[b * n + i];

        let mut ech = SparseEchelon::new();
        // commutators
        for b in 0..dims[d - 2] {
            for i in 0..n {
                let xib = &mul[d - 2][i].cols[b];
                for j in i + 1..n {
                    let xjb = &mul[d - 2][j].cols[b];
                    let mut row = Row::new();
                    for (k, c) in xjb {
                        add_to(&mut row, col(*k, i), c.clone());
                    }
                    for (k, c) in xib {
                        add_to(&mut row, col(*k, j), -c.clone());
                    }
                    ech.insert(row);
                }
            }
        }
        for r in by_degree.get(&d).into_iter().flatten() {
            let mut row = Row::new();
            for (e, c) in &r.terms {
                let last = e.iter().rposition(|&x| x > 0).expect("positive degree");
                let mut rest = e.clone();
                rest[last] -= 1;
                for (k, x) in monomial_in(&mul, &rest) {
                    add_to(&mut row, col(k, last), c * x);
                }
            }
            ech.insert(row);
        }
        ech.interreduce();
        let std_idx: Vec<usize> = (0..order.len()).filter(|c| !ech.rows.contains_key(c)).collect();
        if std_idx.is_empty() {
            artinian = true;
            break;
        }
        let std_pos: HashMap<usize, usize> = std_idx.iter().enumerate().map(|(k, &c)| (c, k)).collect();

        let mut md = Vec::with_capacity(n);
        for i in 0..n {
            let mut cols = Vec::with_capacity(prev);
            for b in 0..prev {
                let c = col(b, i);
                let v: SparseVec<BigRational> = if let Some(&k) = std_pos.get(&c) {
                    vec![(k, BigRational::one())]
                } else {
                    let row = &ech.rows[&c];
                    let mut v: SparseVec<BigRational> =
                        row.iter().filter(|(j, _)| **j != c).map(|(j, x)| (std_pos[j], -x.clone())).collect();
                    v.sort_by_key(|(k, _)| *k);
                    v
                };
                cols.push(v);
            }
            md.push(SparseCols { rows: std_idx.len(), cols });
        }
        mul.push(md);
        section.push(std_idx.iter().map(|&c| vec![(order[c].1, vec![(order[c].0, BigRational::one())])]).collect());
        let monos: Vec<Exponent> = std_idx.iter().map(|&c| mono_of(&order[c])).collect();
        labels.push(monos.iter().map(|e| monomial_string(names, e)).collect());
        dims.push(std_idx.len());
        basis_monos.push(monos);
    }
    Algebra::from_parts(AlgebraParts { field: Rationals, names: names.to_vec(), dims, artinian, mul, section, labels })
}

fn add_to(row: &mut Row, c: usize, x: BigRational) {
    if x.is_zero() {
        return;
    }
    let e = row.entry(c).or_insert_with(BigRational::zero);
    *e += x;
    if e.is_zero() {
        row.remove(&c);
    }
}

/// Coordinates of the monomial `x^e` in the basis built so far.
fn monomial_in(mul: &[Vec<SparseCols<BigRational>>], e: &[u32]) -> SparseVec<BigRational> {
    let mut v: SparseVec<BigRational> = vec![(0, BigRational::one())];
    let mut deg = 0;
    for (i, &k) in e.iter().enumerate() {
        for _ in 0..k {
            let m = &mul[deg][i];
            let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
            for (b, x) in &v {
                for (r, y) in &m.cols[*b] {
                    let s = acc.entry(*r).or_insert_with(BigRational::zero);
                    *s += x * y;
                }
            }
            v = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            deg += 1;
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galgebra::poly::PolyRing;

    fn build(vars: &[&str], rels: &[&str], cap: usize) -> Algebra<Rationals> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let ring = PolyRing { names: &names };
        let rels: Vec<Poly> = rels.iter().map(|r| ring.parse(r).unwrap()).collect();
        build_from_presentation(&names, &rels, cap).unwrap()
    }

    #[test]
    fn dual_numbers() {
        let a = build(&["x"], &["x^2"], 3);
        assert_eq!(a.dims(), &[1, 1]);
        assert!(a.is_artinian());
    }

    #[test]
    fn roos_ring() {
        let a = build(&["x", "y", "z", "u"], &["x^2", "x*y", "y^2", "z^2", "z*u", "u^2"], 4);
        assert_eq!(a.dims(), &[1, 4, 4]);
        assert!(a.is_artinian());
    }

    #[test]
    fn conca_ring_degree_two() {
        let a = build(&["x", "y", "z", "u"], &["x^2+y*z", "x*y-y*u", "x*z", "x*u", "y^2"], 5);
        assert_eq!(a.dims()[1], 4);
        // the five quadrics have distinct leading monomials, so they are independent in S_2
        assert_eq!(a.dims()[2], 10 - 5);
        assert!(!a.is_artinian());
        assert_eq!(a.top(), 5);
    }

    #[test]
    fn relation_validation() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        let ring = PolyRing { names: &names };
        let bad = ring.parse("x^2+y").unwrap();
        assert!(build_from_presentation(&names, &[bad], 3).is_err());
        let lin = ring.parse("x-y").unwrap();
        assert!(build_from_presentation(&names, &[lin], 3).is_err());
        assert!(build_from_presentation(&names, &[], 0).is_err());
    }

    #[test]
    fn polynomial_ring_truncation() {
        let a = build(&["x", "y"], &[], 4);
        assert_eq!(a.dims(), &[1, 2, 3, 4, 5]);
        assert!(!a.is_artinian());
    }
}
