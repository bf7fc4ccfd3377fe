use std::fmt;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone)]
pub struct Mat<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> PartialEq for Mat<K> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<K: Field> fmt::Debug for Mat<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over {}", self.rows, self.cols, self.field.describe())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> Mat<K> {
    pub fn zeros(field: K, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Panics if a row has the wrong length.
    pub fn from_rows(field: K, cols: usize, rows: Vec<Vec<K::Elem>>) -> Self {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r);
        }
        Mat { field, rows: nrows, cols, data }
    }

    pub fn from_i64(field: K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| field.from_i64(x)).collect()).collect();
        Self::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> K {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, r: usize, c: usize) -> &K::Elem {
        &self.data[r * self.cols + c]
    }
    pub fn set(&mut self, r: usize, c: usize, v: K::Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[K::Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn row_mut(&mut self, r: usize) -> &mut [K::Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn column(&self, c: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat<K>) -> Result<Mat<K>> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let k = self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for r in 0..self.rows {
            for (i, a) in self.row(r).iter().enumerate() {
                if k.is_zero(a) {
                    continue;
                }
                let orow = other.row(i);
                let dst = out.row_mut(r);
                for (d, b) in dst.iter_mut().zip(orow) {
                    k.add_mul_assign(d, a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let k = self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = k.zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    k.add_mul_assign(&mut acc, a, b);
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Mat<K>) -> Result<Mat<K>> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let k = self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect();
        Ok(Mat { field: k, rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: &K::Elem) -> Mat<K> {
        let k = self.field;
        Mat { field: k, rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| k.mul(a, s)).collect() }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Mat<K>) -> Result<Mat<K>> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Mat { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form with zero rows removed, plus pivot columns.
    pub fn rref_with_pivots(&self) -> (Mat<K>, Vec<usize>) {
        let (rows, piv) = self.field.rref_rows(self.to_rows(), self.cols);
        (Mat::from_rows(self.field, self.cols, rows), piv)
    }

    pub fn rref(&self) -> Mat<K> {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    /// `{v : self * v = 0}`.
    pub fn kernel(&self) -> Subspace<K> {
        let k = self.field;
        let (r, piv) = self.rref_with_pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &piv {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[f] = k.one();
            for (i, &p) in piv.iter().enumerate() {
                let e = r.get(i, f);
                if !k.is_zero(e) {
                    v[p] = k.neg(e);
                }
            }
            basis.push(v);
        }
        Subspace::from_spanning(k, self.cols, basis)
    }

    /// Some `x` with `self * x = rhs`, if one exists.
    pub fn solve(&self, rhs: &[K::Elem]) -> Result<Option<Vec<K::Elem>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: rhs.len() });
        }
        let k = self.field;
        let aug: Vec<Vec<K::Elem>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(rhs[r].clone());
                row
            })
            .collect();
        let (rows, piv) = k.rref_rows(aug, self.cols + 1);
        if piv.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![k.zero(); self.cols];
        for (row, &p) in rows.iter().zip(&piv) {
            x[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    fn m(rows: &[&[i64]]) -> Mat<Rationals> {
        Mat::from_i64(Rationals, rows)
    }

    #[test]
    fn rref_examples() {
        assert_eq!(m(&[&[1, 2], &[2, 4]]).rref(), m(&[&[1, 2]]));
        assert_eq!(Mat::identity(Rationals, 3).rref(), Mat::identity(Rationals, 3));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rref(), m(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn rref_with_fractions() {
        let a = m(&[&[2, 3, 5], &[4, 7, 1], &[6, 10, 6]]);
        let r = a.rref();
        assert_eq!(r.rows(), 2);
        assert_eq!(r.rref(), r);
        // row space preserved: every original row reduces into r's span
        let s = Subspace::from_spanning(Rationals, 3, r.to_rows());
        for i in 0..3 {
            assert!(s.contains(a.row(i)));
        }
    }

    #[test]
    fn kernel_examples() {
        let k = m(&[&[1, 2], &[2, 4]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[Rationals.from_i64(-2), Rationals.from_i64(1)]));
        assert_eq!(Mat::identity(Rationals, 4).kernel().dim(), 0);
        let a = m(&[&[1, 1, 1]]);
        let k = a.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(a.mul_vec(v).iter().all(|x| Rationals.is_zero(x)));
        }
    }

    #[test]
    fn solve_identity() {
        let b: Vec<_> = [3, -1, 7].iter().map(|&x| Rationals.from_i64(x)).collect();
        assert_eq!(Mat::identity(Rationals, 3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(m(&[&[1, 1], &[1, 1]]).solve(&b[..2]).unwrap(), None);
    }

    #[test]
    fn mod_p_rank_drops() {
        let f = PrimeField::new(5).unwrap();
        let a = Mat::from_i64(f, &[&[1, 2], &[3, 1]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(Mat::from_i64(Rationals, &[&[1, 2], &[3, 1]]).rank(), 2);
    }

    #[test]
    fn bigint_fallback() {
        // entries large enough to overflow the i128 pass
        let big = 1i64 << 40;
        let a = m(&[&[big, big - 1, 3], &[big - 3, big + 7, 11], &[5, big, big + 1], &[1, 2, 3]]);
        let r = a.rref();
        assert_eq!(r, Mat::identity(Rationals, 3));
    }
}
