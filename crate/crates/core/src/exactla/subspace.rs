use std::fmt;

use super::field::Field;
use super::mat::Mat;
use crate::error::{Error, Result};

/// A subspace of `K^n`, stored by its reduced row echelon basis.
#[derive(Clone)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    basis: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> PartialEq for Subspace<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.pivots == other.pivots && self.basis == other.basis
    }
}

impl<K: Field> fmt::Debug for Subspace<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient)
    }
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: K, ambient: usize) -> Self {
        Subspace { field, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: K, ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Subspace { field, ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors. Panics on a vector of the wrong length.
    pub fn from_spanning(field: K, ambient: usize, vectors: Vec<Vec<K::Elem>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let (basis, pivots) = field.rref_rows(vectors, ambient);
        Subspace { field, ambient, basis, pivots }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Mat<K>) -> Self {
        Self::from_spanning(m.field(), m.cols(), m.to_rows())
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Mat<K>) -> Self {
        Self::row_space(&m.transpose())
    }

    pub fn field(&self) -> K {
        self.field
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }
    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn basis_mat(&self) -> Mat<K> {
        Mat::from_rows(self.field, self.ambient, self.basis.clone())
    }

    /// Columns that are not pivots; they index a basis of the quotient space.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Normal form of `v` modulo the subspace (zero at every pivot column).
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let k = self.field;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if k.is_zero(&out[p]) {
                continue;
            }
            let f = k.neg(&out[p]);
            for (o, r) in out.iter_mut().zip(row) {
                k.add_mul_assign(o, &f, r);
            }
        }
        out
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        let k = self.field;
        self.reduce(v).iter().all(|x| k.is_zero(x))
    }

    /// Coordinates of `v` in the echelon basis, assuming `v` lies in the subspace.
    pub fn coordinates(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        self.pivots.iter().map(|&p| v[p].clone()).collect()
    }

    /// Image of `v` in the quotient `K^n / self`, in non-pivot coordinates.
    pub fn quotient_coords(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let r = self.reduce(v);
        self.non_pivots().into_iter().map(|c| r[c].clone()).collect()
    }

    pub fn contains_subspace(&self, other: &Subspace<K>) -> bool {
        other.ambient == self.ambient && other.basis.iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace<K>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        if other.is_zero() || self.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_full() {
            return Ok(other.clone());
        }
        let vecs: Vec<_> = self.basis.iter().chain(&other.basis).cloned().collect();
        Ok(Self::from_spanning(self.field, self.ambient, vecs))
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace<K>) -> Result<Subspace<K>> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let k = self.field;
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for u in &self.basis {
            let mut r = u.clone();
            r.extend(u.iter().cloned());
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat(k.zero()).take(n));
            rows.push(r);
        }
        let (red, piv) = k.rref_rows(rows, 2 * n);
        let vecs = red
            .into_iter()
            .zip(piv)
            .filter(|(_, p)| *p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Ok(Self::from_spanning(k, n, vecs))
    }

    /// Vectors from `self`'s basis that extend a basis of `sub` to one of `self`.
    pub fn complement_of(&self, sub: &Subspace<K>) -> Vec<Vec<K::Elem>> {
        let mut ech = Echelon::new(self.field, self.ambient);
        for v in &sub.basis {
            ech.insert(v.clone());
        }
        let mut out = Vec::new();
        for v in &self.basis {
            if ech.rank() == self.dim() {
                break;
            }
            if ech.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }

    /// The span of `self` and one more vector.
    pub fn with_vector(&self, v: Vec<K::Elem>) -> Subspace<K> {
        let mut vecs = self.basis.clone();
        vecs.push(v);
        Self::from_spanning(self.field, self.ambient, vecs)
    }

    /// Image under a linear map given by a matrix acting on column vectors.
    pub fn image(&self, m: &Mat<K>) -> Subspace<K> {
        let vecs = self.basis.iter().map(|v| m.mul_vec(v)).collect();
        Self::from_spanning(self.field, m.rows(), vecs)
    }

    /// Maps every basis entry into another field.
    pub fn map_field<L: Field>(&self, target: L, f: impl Fn(&K::Elem) -> Option<L::Elem>) -> Option<Subspace<L>> {
        let vecs: Option<Vec<Vec<L::Elem>>> =
            self.basis.iter().map(|v| v.iter().map(&f).collect::<Option<Vec<_>>>()).collect();
        Some(Subspace::from_spanning(target, self.ambient, vecs?))
    }
}

/// Incremental semi-echelon basis: each stored row has a unit pivot that is
/// zero in every row inserted after it.
pub struct Echelon<K: Field> {
    field: K,
    ambient: usize,
    rows: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Echelon<K> {
    pub fn new(field: K, ambient: usize) -> Self {
        Echelon { field, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, mut v: Vec<K::Elem>) -> Vec<K::Elem> {
        let k = self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if k.is_zero(&v[p]) {
                continue;
            }
            let f = k.neg(&v[p]);
            for (o, r) in v.iter_mut().zip(row) {
                k.add_mul_assign(o, &f, r);
            }
        }
        v
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: Vec<K::Elem>) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let k = self.field;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&v[p]);
        for x in v.iter_mut() {
            *x = k.mul(x, &inv);
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace<K> {
        Subspace::from_spanning(self.field, self.ambient, self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;

    fn e(n: usize, i: usize) -> Vec<num_rational::BigRational> {
        let mut v = vec![Rationals.zero(); n];
        v[i] = Rationals.one();
        v
    }

    #[test]
    fn intersection_examples() {
        let u = Subspace::from_spanning(Rationals, 3, vec![e(3, 0), e(3, 1)]);
        let v = Subspace::from_spanning(Rationals, 3, vec![e(3, 1), e(3, 2)]);
        let w = u.intersect(&v).unwrap();
        assert_eq!(w, Subspace::from_spanning(Rationals, 3, vec![e(3, 1)]));
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn sum_and_contains() {
        let u = Subspace::from_spanning(Rationals, 2, vec![e(2, 0)]);
        let v = Subspace::from_spanning(Rationals, 2, vec![e(2, 1)]);
        assert!(u.sum(&v).unwrap().is_full());
        let d = Subspace::from_spanning(Rationals, 2, vec![vec![Rationals.one(), Rationals.one()]]);
        assert!(!d.contains(&e(2, 0)));
        assert!(u.sum(&Subspace::zero(Rationals, 3)).is_err());
    }

    #[test]
    fn quotient_coordinates() {
        let d = Subspace::from_spanning(Rationals, 2, vec![vec![Rationals.one(), Rationals.one()]]);
        assert_eq!(d.non_pivots(), vec![1]);
        assert_eq!(d.quotient_coords(&e(2, 0)), vec![Rationals.from_i64(-1)]);
    }

    #[test]
    fn complement() {
        let full = Subspace::full(Rationals, 3);
        let sub = Subspace::from_spanning(Rationals, 3, vec![e(3, 1)]);
        let c = full.complement_of(&sub);
        assert_eq!(c.len(), 2);
    }
}
