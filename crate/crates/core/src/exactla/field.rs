use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::intelim;

/// Default prime for the modular prefilter.
pub const DEFAULT_PRIME: u64 = 32003;

/// A field given as a context object; elements carry no reference to it.
pub trait Field: Copy + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// `None` when the denominator vanishes in this field.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// A rational lift (symmetric residue for prime fields).
    fn to_rational(&self, a: &Self::Elem) -> BigRational;
    fn describe(&self) -> String;
    fn is_exact_rational(&self) -> bool {
        false
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// `acc += a * b`
    fn add_mul_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        if self.is_zero(a) || self.is_zero(b) {
            return;
        }
        *acc = self.add(acc, &self.mul(a, b));
    }

    /// Reduced row echelon form of `rows` (each of length `ncols`), zero rows dropped.
    /// Returns the pivot column of each surviving row.
    fn rref_rows(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> (Vec<Vec<Self::Elem>>, Vec<usize>) {
        gauss_jordan(self, rows, ncols)
    }
}

/// Plain Gauss-Jordan elimination, used for fields where entries do not grow.
pub fn gauss_jordan<K: Field + ?Sized>(
    k: &K,
    mut rows: Vec<Vec<K::Elem>>,
    ncols: usize,
) -> (Vec<Vec<K::Elem>>, Vec<usize>) {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !k.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(&rows[r][c]);
        if !k.is_one(&inv) {
            for x in rows[r][c..].iter_mut() {
                *x = k.mul(x, &inv);
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[c]) {
                continue;
            }
            let f = k.neg(&row[c]);
            for j in c..ncols {
                if !k.is_zero(&pivot_row[j]) {
                    let cur = row[j].clone();
                    let mut acc = cur;
                    k.add_mul_assign(&mut acc, &f, &pivot_row[j]);
                    row[j] = acc;
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// The rationals, with elements in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero");
        a.recip()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_rational(&self, a: &BigRational) -> BigRational {
        a.clone()
    }
    fn describe(&self) -> String {
        "Q".into()
    }
    fn is_exact_rational(&self) -> bool {
        true
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add_mul_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            *acc = BigRational::from_integer(acc.numer() + a.numer() * b.numer());
        } else {
            *acc += a * b;
        }
    }

    fn rref_rows(&self, rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        intelim::rref_rational(rows, ncols)
    }
}

/// The prime field F_p for a prime p < 2^32.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

impl PrimeField {
    /// Returns `None` unless `p` is a prime below 2^32.
    pub fn new(p: u64) -> Option<Self> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return None;
        }
        Some(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut b: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        b %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % self.p;
            }
            b = b * b % self.p;
            e >>= 1;
        }
        r
    }

    fn reduce_bigint(&self, n: &BigInt) -> u64 {
        let m = n.mod_floor(&BigInt::from(self.p));
        m.to_u64().expect("residue fits in u64")
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        assert!(*a != 0, "inverse of zero");
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.reduce_bigint(q.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(&self.reduce_bigint(q.numer()), &self.inv(&d)))
    }
    fn to_rational(&self, a: &u64) -> BigRational {
        let v = if *a > self.p / 2 {
            *a as i64 - self.p as i64
        } else {
            *a as i64
        };
        BigRational::from_integer(BigInt::from(v))
    }
    fn describe(&self) -> String {
        format!("F_{}", self.p)
    }
    fn add_mul_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b % self.p) % self.p;
    }

    fn rref_rows(&self, rows: Vec<Vec<u64>>, ncols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
        rref_mod_p(self.p, rows, ncols)
    }
}

/// Gauss-Jordan over F_p with delayed reduction of row updates.
fn rref_mod_p(p: u64, mut rows: Vec<Vec<u64>>, ncols: usize) -> (Vec<Vec<u64>>, Vec<usize>) {
    let k = PrimeField { p };
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = k.inv(&rows[r][c]);
        if inv != 1 {
            for x in rows[r][c..].iter_mut() {
                *x = *x * inv % p;
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        let nz: Vec<usize> = (c..ncols).filter(|&j| pivot_row[j] != 0).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for &j in &nz {
                row[j] = (row[j] + f * pivot_row[j]) % p;
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Lowest common multiple of the denominators of a rational vector.
pub fn common_denominator(v: &[BigRational]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| {
        if x.denom().is_one() {
            acc
        } else {
            acc.lcm(x.denom())
        }
    })
}

/// Scales a rational vector to a primitive integer vector (content 1, sign kept).
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let d = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&d / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_ops_stay_reduced() {
        let k = Rationals;
        let x = k.add(&q(1, 2), &q(1, 3));
        assert_eq!(x, q(5, 6));
        assert_eq!(k.mul(&q(2, 4), &q(4, 2)), k.one());
        assert_eq!(*k.inv(&q(-3, 7)).denom(), BigInt::from(3));
    }

    #[test]
    fn prime_field_arith() {
        let k = PrimeField::default();
        assert_eq!(k.mul(&k.inv(&12345), &12345), 1);
        assert_eq!(k.from_i64(-1), DEFAULT_PRIME - 1);
        assert_eq!(k.from_rational(&q(1, 2)), Some(k.inv(&2)));
        assert_eq!(k.from_rational(&q(1, DEFAULT_PRIME as i64)), None);
        assert_eq!(k.to_rational(&(DEFAULT_PRIME - 2)), q(-2, 1));
        assert!(PrimeField::new(32002).is_none());
    }

    #[test]
    fn primitive_vector() {
        let v = vec![q(1, 2), q(-3, 4), q(0, 1)];
        let w = primitive_integer_vector(&v);
        assert_eq!(w, vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}
