//! Fraction-free Gauss-Jordan elimination over the integers.
//!
//! Rational rows are scaled to primitive integer rows, eliminated with
//! integer row operations (content removed after every scaling), and only
//! divided by their pivots at the very end. A checked `i128` pass is tried
//! first; any overflow restarts the elimination with `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::primitive_integer_vector;

pub(crate) trait EInt: Clone + PartialEq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_neg(&self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn size(&self) -> u64;
    fn into_bigint(self) -> BigInt;
}

impl EInt for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_neg(&self) -> Option<Self> {
        i128::checked_neg(*self)
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        if a == 0 {
            return b as i128;
        }
        if b == 0 {
            return a as i128;
        }
        let shift = (a | b).trailing_zeros();
        a >>= a.trailing_zeros();
        loop {
            b >>= b.trailing_zeros();
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            b -= a;
            if b == 0 {
                break;
            }
        }
        (a << shift) as i128
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn size(&self) -> u64 {
        128 - self.unsigned_abs().leading_zeros() as u64
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl EInt for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn size(&self) -> u64 {
        self.bits()
    }
    fn into_bigint(self) -> BigInt {
        self
    }
}

/// Eliminates in place; `None` on overflow of the integer type.
pub(crate) fn ff_gauss_jordan<I: EInt>(mut rows: Vec<Vec<I>>, ncols: usize) -> Option<(Vec<Vec<I>>, Vec<usize>)> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let mut best: Option<(usize, u64)> = None;
        for i in r..nrows {
            if !rows[i][c].is_zero() {
                let s = rows[i][c].size();
                if best.map_or(true, |(_, bs)| s < bs) {
                    best = Some((i, s));
                    if s <= 1 {
                        break;
                    }
                }
            }
        }
        let Some((p, _)) = best else { continue };
        rows.swap(r, p);
        let prow = std::mem::take(&mut rows[r]);
        let pv = prow[c].clone();
        let nz: Vec<usize> = (c..ncols).filter(|&j| !prow[j].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let a = row[c].clone();
            let g = pv.gcd(&a);
            let m1 = pv.div_exact(&g);
            let m2 = a.div_exact(&g);
            if m1.is_unit() {
                // row <- m1*row - m2*prow with m1 = ±1: only touch prow's support
                if m1 != I::one() {
                    for x in row.iter_mut() {
                        if !x.is_zero() {
                            *x = x.checked_neg()?;
                        }
                    }
                }
                for &j in &nz {
                    let t = m2.checked_mul(&prow[j])?;
                    row[j] = row[j].checked_sub(&t)?;
                }
            } else {
                for x in row.iter_mut() {
                    if !x.is_zero() {
                        *x = x.checked_mul(&m1)?;
                    }
                }
                for &j in &nz {
                    let t = m2.checked_mul(&prow[j])?;
                    row[j] = row[j].checked_sub(&t)?;
                }
                make_primitive(row);
            }
        }
        rows[r] = prow;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Some((rows, pivots))
}

fn make_primitive<I: EInt>(row: &mut [I]) {
    let mut g = I::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_unit() {
                return;
            }
        }
    }
    if g.is_zero() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x = x.div_exact(&g);
        }
    }
}

/// Exact reduced row echelon form of rational rows.
pub(crate) fn rref_rational(rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| primitive_integer_vector(r))
        .collect();
    let small: Option<Vec<Vec<i128>>> = ints
        .iter()
        .map(|r| r.iter().map(|x| x.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 100))).collect())
        .collect();
    if let Some(small) = small {
        if let Some((rows, piv)) = ff_gauss_jordan(small, ncols) {
            return normalize(rows, piv);
        }
    }
    let (rows, piv) = ff_gauss_jordan(ints, ncols).expect("bigint elimination cannot overflow");
    normalize(rows, piv)
}

fn normalize<I: EInt>(rows: Vec<Vec<I>>, piv: Vec<usize>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let out = rows
        .into_iter()
        .zip(&piv)
        .map(|(row, &c)| {
            let d = row[c].clone().into_bigint();
            row.into_iter()
                .map(|x| {
                    if x.is_zero() {
                        BigRational::zero()
                    } else {
                        BigRational::new(x.into_bigint(), d.clone())
                    }
                })
                .collect()
        })
        .collect();
    (out, piv)
}
