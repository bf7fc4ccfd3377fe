use std::fmt;

use num_rational::BigRational;
use rand::Rng;

use super::expr::{parse_expr, EvalTarget};
use crate::error::{Error, Result};
use crate::exactla::{Field, Mat};

pub type SparseVec<E> = Vec<(usize, E)>;

/// Column-sparse matrix; column `j` lists its nonzero `(row, value)` pairs.
#[derive(Clone, Debug)]
pub struct SparseCols<E> {
    pub rows: usize,
    pub cols: Vec<SparseVec<E>>,
}

impl<E: Clone> SparseCols<E> {
    pub fn apply<K: Field<Elem = E>>(&self, k: &K, v: &[E]) -> Vec<E> {
        debug_assert_eq!(v.len(), self.cols.len());
        let mut out = vec![k.zero(); self.rows];
        for (x, col) in v.iter().zip(&self.cols) {
            if k.is_zero(x) {
                continue;
            }
            for (r, a) in col {
                k.add_mul_assign(&mut out[*r], x, a);
            }
        }
        out
    }

    pub fn to_dense<K: Field<Elem = E>>(&self, k: K) -> Mat<K> {
        let mut m = Mat::zeros(k, self.rows, self.cols.len());
        for (j, col) in self.cols.iter().enumerate() {
            for (r, a) in col {
                m.set(*r, j, a.clone());
            }
        }
        m
    }

    pub fn from_dense<K: Field<Elem = E>>(m: &Mat<K>) -> Self {
        let k = m.field();
        let cols = (0..m.cols())
            .map(|j| (0..m.rows()).filter(|&r| !k.is_zero(m.get(r, j))).map(|r| (r, m.get(r, j).clone())).collect())
            .collect();
        SparseCols { rows: m.rows(), cols }
    }
}

/// Homogeneous element of an algebra (or of a free module piece).
#[derive(Clone, Debug, PartialEq)]
pub struct Element<E> {
    pub degree: usize,
    pub coords: Vec<E>,
}

/// A standard graded algebra, stored degree by degree up to `top`.
///
/// If `artinian`, every piece above `top` is zero and all data is exact.
/// Otherwise `top` is a truncation degree and nothing above it is known.
#[derive(Clone)]
pub struct Algebra<K: Field> {
    field: K,
    names: Vec<String>,
    dims: Vec<usize>,
    artinian: bool,
    /// `mul[d][i]`: multiplication by variable `i` from `A_d` to `A_{d+1}`, for `d < top`.
    mul: Vec<Vec<SparseCols<K::Elem>>>,
    /// `section[d][k]`: basis element `k` of `A_d` written as a sum of `x_i * c_i`.
    section: Vec<Vec<Vec<(usize, SparseVec<K::Elem>)>>>,
    labels: Vec<Vec<String>>,
    aliases: Vec<(String, Vec<K::Elem>)>,
}

impl<K: Field> fmt::Debug for Algebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra over {} in {} variables, dims {:?}{}",
            self.field.describe(),
            self.names.len(),
            self.dims,
            if self.artinian { "" } else { " (truncated)" }
        )
    }
}

pub struct AlgebraParts<K: Field> {
    pub field: K,
    pub names: Vec<String>,
    pub dims: Vec<usize>,
    pub artinian: bool,
    pub mul: Vec<Vec<SparseCols<K::Elem>>>,
    pub section: Vec<Vec<Vec<(usize, SparseVec<K::Elem>)>>>,
    pub labels: Vec<Vec<String>>,
}

impl<K: Field> Algebra<K> {
    pub fn from_parts(p: AlgebraParts<K>) -> Result<Self> {
        let top = p.dims.len().checked_sub(1).ok_or_else(|| Error::Invalid("no graded pieces".into()))?;
        if p.dims[0] != 1 {
            return Err(Error::Invalid("A_0 must be 1-dimensional".into()));
        }
        if top >= 1 && p.dims[1] != p.names.len() {
            return Err(Error::Invalid("A_1 must have one basis vector per variable".into()));
        }
        if p.dims.iter().any(|&d| d == 0) {
            return Err(Error::Invalid("zero pieces must be trimmed".into()));
        }
        if p.mul.len() != top || p.section.len() != top + 1 || p.labels.len() != top + 1 {
            return Err(Error::Invalid("structure data does not match the number of pieces".into()));
        }
        for d in 0..top {
            if p.mul[d].len() != p.names.len() {
                return Err(Error::Invalid(format!("degree {d}: wrong number of multiplication maps")));
            }
            for m in &p.mul[d] {
                if m.rows != p.dims[d + 1] || m.cols.len() != p.dims[d] {
                    return Err(Error::Invalid(format!("degree {d}: multiplication map has wrong shape")));
                }
            }
        }
        for d in 1..=top {
            if p.section[d].len() != p.dims[d] {
                return Err(Error::Invalid(format!("degree {d}: section has wrong length")));
            }
        }
        Ok(Algebra {
            field: p.field,
            names: p.names,
            dims: p.dims,
            artinian: p.artinian,
            mul: p.mul,
            section: p.section,
            labels: p.labels,
            aliases: Vec::new(),
        })
    }

    pub fn field(&self) -> K {
        self.field
    }
    pub fn var_names(&self) -> &[String] {
        &self.names
    }
    pub fn num_vars(&self) -> usize {
        self.names.len()
    }
    /// Hilbert function through `top`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }
    pub fn is_artinian(&self) -> bool {
        self.artinian
    }
    /// Whether `A_d` is known exactly.
    pub fn known(&self, d: usize) -> bool {
        self.artinian || d <= self.top()
    }
    /// `dim A_d`; zero above the socle degree of an artinian algebra.
    pub fn dim(&self, d: usize) -> usize {
        if d <= self.top() {
            self.dims[d]
        } else {
            assert!(self.artinian, "degree {d} beyond truncation {}", self.top());
            0
        }
    }
    pub fn labels(&self, d: usize) -> &[String] {
        &self.labels[d]
    }
    pub fn mul_map(&self, d: usize, i: usize) -> &SparseCols<K::Elem> {
        &self.mul[d][i]
    }
    pub fn section(&self, d: usize, k: usize) -> &[(usize, SparseVec<K::Elem>)] {
        &self.section[d][k]
    }
    pub fn aliases(&self) -> &[(String, Vec<K::Elem>)] {
        &self.aliases
    }

    pub fn with_aliases(mut self, aliases: Vec<(String, Vec<K::Elem>)>) -> Self {
        for (n, v) in aliases {
            if !self.names.contains(&n) && !self.aliases.iter().any(|(m, _)| *m == n) {
                self.aliases.push((n, v));
            }
        }
        self
    }

    pub fn zero(&self, d: usize) -> Element<K::Elem> {
        Element { degree: d, coords: vec![self.field.zero(); self.dim(d)] }
    }
    pub fn one(&self) -> Element<K::Elem> {
        Element { degree: 0, coords: vec![self.field.one()] }
    }
    pub fn var(&self, i: usize) -> Element<K::Elem> {
        let mut e = self.zero(1);
        e.coords[i] = self.field.one();
        e
    }
    pub fn basis_element(&self, d: usize, k: usize) -> Element<K::Elem> {
        let mut e = self.zero(d);
        e.coords[k] = self.field.one();
        e
    }
    pub fn is_zero(&self, a: &Element<K::Elem>) -> bool {
        a.coords.iter().all(|x| self.field.is_zero(x))
    }

    /// `x_i * v` for `v` in `A_d`.
    pub fn mul_var_vec(&self, i: usize, d: usize, v: &[K::Elem]) -> Vec<K::Elem> {
        if d >= self.top() {
            assert!(self.artinian, "product beyond truncation degree");
            return Vec::new();
        }
        self.mul[d][i].apply(&self.field, v)
    }

    pub fn add(&self, a: &Element<K::Elem>, b: &Element<K::Elem>) -> Result<Element<K::Elem>> {
        if a.degree != b.degree {
            return Err(Error::NotHomogeneous(format!("adding degrees {} and {}", a.degree, b.degree)));
        }
        let k = self.field;
        Ok(Element { degree: a.degree, coords: a.coords.iter().zip(&b.coords).map(|(x, y)| k.add(x, y)).collect() })
    }

    pub fn scale(&self, a: &Element<K::Elem>, s: &K::Elem) -> Element<K::Elem> {
        let k = self.field;
        Element { degree: a.degree, coords: a.coords.iter().map(|x| k.mul(x, s)).collect() }
    }

    /// Writes `v` in `A_d` (`d ≥ 1`) as `sum_i x_i * c_i`, grouped by variable.
    pub fn decompose(&self, d: usize, v: &[K::Elem]) -> Vec<(usize, Vec<K::Elem>)> {
        let k = self.field;
        let mut parts: Vec<Option<Vec<K::Elem>>> = vec![None; self.num_vars()];
        for (idx, a) in v.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (i, c) in &self.section[d][idx] {
                let slot = parts[*i].get_or_insert_with(|| vec![k.zero(); self.dims[d - 1]]);
                for (j, x) in c {
                    k.add_mul_assign(&mut slot[*j], a, x);
                }
            }
        }
        parts.into_iter().enumerate().filter_map(|(i, p)| p.map(|p| (i, p))).collect()
    }

    fn mul_rec(&self, a: &[K::Elem], da: usize, b: &[K::Elem], db: usize) -> Vec<K::Elem> {
        let k = self.field;
        if da == 0 {
            return b.iter().map(|x| k.mul(x, &a[0])).collect();
        }
        let mut out = vec![k.zero(); self.dim(da + db)];
        for (i, c) in self.decompose(da, a) {
            let inner = self.mul_rec(&c, da - 1, b, db);
            let prod = self.mul_var_vec(i, da + db - 1, &inner);
            for (o, p) in out.iter_mut().zip(&prod) {
                *o = k.add(o, p);
            }
        }
        out
    }

    pub fn mul(&self, a: &Element<K::Elem>, b: &Element<K::Elem>) -> Result<Element<K::Elem>> {
        let d = a.degree + b.degree;
        if !self.known(d) {
            return Err(Error::DegreeOverflow { degree: d, truncation: self.top() });
        }
        if d > self.top() {
            return Ok(self.zero(d));
        }
        let coords = if a.degree <= b.degree {
            self.mul_rec(&a.coords, a.degree, &b.coords, b.degree)
        } else {
            self.mul_rec(&b.coords, b.degree, &a.coords, a.degree)
        };
        Ok(Element { degree: d, coords })
    }

    /// `levels[e][k] = b_{e,k} * v` for the basis `b_{e,k}` of `A_e`, `e ≤ max_e`.
    /// `act(i, e, w)` multiplies a level-`e` vector by `x_i`.
    pub fn orbit<F>(&self, v: Vec<K::Elem>, max_e: usize, act: F) -> Vec<Vec<Vec<K::Elem>>>
    where
        F: Fn(usize, usize, &[K::Elem]) -> Vec<K::Elem>,
    {
        let k = self.field;
        let max_e = max_e.min(self.top());
        let mut levels: Vec<Vec<Vec<K::Elem>>> = vec![vec![v]];
        for e in 1..=max_e {
            let prev = &levels[e - 1];
            let plen = prev[0].len();
            let mut level = Vec::with_capacity(self.dims[e]);
            for kk in 0..self.dims[e] {
                let mut acc: Option<Vec<K::Elem>> = None;
                for (i, c) in &self.section[e][kk] {
                    let w = if c.len() == 1 && k.is_one(&c[0].1) {
                        act(*i, e - 1, &prev[c[0].0])
                    } else {
                        let mut lin = vec![k.zero(); plen];
                        for (j, x) in c {
                            for (l, y) in lin.iter_mut().zip(&prev[*j]) {
                                k.add_mul_assign(l, x, y);
                            }
                        }
                        act(*i, e - 1, &lin)
                    };
                    match acc.as_mut() {
                        None => acc = Some(w),
                        Some(a) => {
                            for (x, y) in a.iter_mut().zip(&w) {
                                *x = k.add(x, y);
                            }
                        }
                    }
                }
                level.push(acc.expect("sections are nonempty in positive degree"));
            }
            levels.push(level);
        }
        levels
    }

    /// `b * f` for every basis element `b` of `A_e`, `e ≤ max_e` (clipped to the known range).
    pub fn element_orbit(&self, f: &Element<K::Elem>, max_e: usize) -> Vec<Vec<Vec<K::Elem>>> {
        let cap = if self.artinian { max_e } else { max_e.min(self.top().saturating_sub(f.degree)) };
        let g = f.degree;
        self.orbit(f.coords.clone(), cap, |i, e, w| self.mul_var_vec(i, g + e, w))
    }

    /// Matrix of multiplication by `f` from `A_d` to `A_{d + deg f}`.
    pub fn mult_matrix(&self, f: &Element<K::Elem>, d: usize) -> Result<Mat<K>> {
        let t = d + f.degree;
        if !self.known(t) {
            return Err(Error::DegreeOverflow { degree: t, truncation: self.top() });
        }
        let rows = self.dim(t);
        let cols = self.dim(d);
        if rows == 0 || cols == 0 {
            return Ok(Mat::zeros(self.field, rows, cols));
        }
        let orb = self.element_orbit(f, d);
        let colvecs = &orb[d];
        let mut m = Mat::zeros(self.field, rows, cols);
        for (j, c) in colvecs.iter().enumerate() {
            for (r, x) in c.iter().enumerate() {
                m.set(r, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn parse(&self, s: &str) -> Result<Element<K::Elem>> {
        parse_expr(s)?.eval(self)
    }

    pub fn format(&self, a: &Element<K::Elem>) -> String {
        let k = self.field;
        let mut out = String::new();
        for (i, c) in a.coords.iter().enumerate() {
            if k.is_zero(c) {
                continue;
            }
            let q = k.to_rational(c);
            let lab = &self.labels[a.degree][i];
            let neg = q < BigRational::from_integer(0.into());
            let mag = if neg { -q.clone() } else { q.clone() };
            let coef = if mag == BigRational::from_integer(1.into()) && a.degree > 0 {
                String::new()
            } else {
                format!("{mag}*")
            };
            let coef = if a.degree == 0 { format!("{mag}") } else { coef };
            let term = if a.degree == 0 { coef } else { format!("{coef}{lab}") };
            if out.is_empty() {
                out = if neg { format!("-{term}") } else { term };
            } else {
                out.push_str(if neg { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            "0".into()
        } else {
            out
        }
    }

    /// Copies the algebra into another field.
    pub fn map_field<L: Field>(&self, target: L, f: impl Fn(&K::Elem) -> Option<L::Elem>) -> Result<Algebra<L>> {
        let fail = || Error::Modular("structure constant not representable in the target field".into());
        let map_sparse = |v: &SparseVec<K::Elem>| -> Result<SparseVec<L::Elem>> {
            let mut out = Vec::with_capacity(v.len());
            for (i, x) in v {
                let y = f(x).ok_or_else(fail)?;
                if !target.is_zero(&y) {
                    out.push((*i, y));
                }
            }
            Ok(out)
        };
        let mut mul = Vec::new();
        for md in &self.mul {
            let mut row = Vec::new();
            for m in md {
                let cols = m.cols.iter().map(&map_sparse).collect::<Result<Vec<_>>>()?;
                row.push(SparseCols { rows: m.rows, cols });
            }
            mul.push(row);
        }
        let mut section = Vec::new();
        for sd in &self.section {
            let mut v = Vec::new();
            for s in sd {
                let mut terms = Vec::new();
                for (i, c) in s {
                    let c = map_sparse(c)?;
                    if !c.is_empty() {
                        terms.push((*i, c));
                    }
                }
                v.push(terms);
            }
            section.push(v);
        }
        let alg = Algebra::from_parts(AlgebraParts {
            field: target,
            names: self.names.clone(),
            dims: self.dims.clone(),
            artinian: self.artinian,
            mul,
            section,
            labels: self.labels.clone(),
        })?;
        let aliases = self
            .aliases
            .iter()
            .map(|(n, v)| Ok((n.clone(), v.iter().map(|x| f(x).ok_or_else(fail)).collect::<Result<Vec<_>>>()?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(alg.with_aliases(aliases))
    }

    /// Random element of `A_d` with small integer coefficients.
    pub fn random_element<R: Rng>(&self, d: usize, rng: &mut R) -> Element<K::Elem> {
        let k = self.field;
        Element { degree: d, coords: (0..self.dim(d)).map(|_| k.from_i64(rng.gen_range(-3..=3))).collect() }
    }
}

impl<K: Field> EvalTarget for Algebra<K> {
    type V = Element<K::Elem>;

    fn constant(&self, q: &BigRational) -> Result<Self::V> {
        let c = self.field.from_rational(q).ok_or_else(|| Error::Modular(format!("constant {q} not invertible")))?;
        Ok(Element { degree: 0, coords: vec![c] })
    }
    fn var(&self, name: &str) -> Result<Self::V> {
        if let Some(i) = self.names.iter().position(|n| n == name) {
            return Ok(self.var(i));
        }
        if let Some((_, v)) = self.aliases.iter().find(|(n, _)| n == name) {
            return Ok(Element { degree: 1, coords: v.clone() });
        }
        Err(Error::Parse { input: name.to_string(), message: "unknown variable".into() })
    }
    fn add(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        if a.degree != b.degree {
            if self.is_zero(a) {
                return Ok(b.clone());
            }
            if self.is_zero(b) {
                return Ok(a.clone());
            }
        }
        Algebra::add(self, a, b)
    }
    fn neg(&self, a: &Self::V) -> Result<Self::V> {
        Ok(self.scale(a, &self.field.from_i64(-1)))
    }
    fn mul(&self, a: &Self::V, b: &Self::V) -> Result<Self::V> {
        Algebra::mul(self, a, b)
    }
    fn scale(&self, a: &Self::V, q: &BigRational) -> Result<Self::V> {
        let c = self.field.from_rational(q).ok_or_else(|| Error::Modular(format!("constant {q} not invertible")))?;
        Ok(Algebra::scale(self, a, &c))
    }
}
