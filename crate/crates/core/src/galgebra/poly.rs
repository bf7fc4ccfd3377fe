//! Sparse multivariate polynomials over Q, used for presentations.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::expr::{parse_expr, EvalTarget};
use crate::error::{Error, Result};

pub type Exponent = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Exponent, BigRational>,
}

impl Poly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some(d)` if every term has total degree `d`; `None` for non-homogeneous or zero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    fn add_term(&mut self, e: Exponent, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e.clone()).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }
}

/// Graded reverse lexicographic comparison with x_1 > x_2 > ... > x_n.
pub fn degrevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            // the smaller exponent in the last differing variable is the larger monomial
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

/// All exponent vectors of total degree `d` in `n` variables, sorted ascending in degrevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut out, &mut cur, 0, d);
    out.sort_by(|a, b| degrevlex_cmp(a, b));
    out
}

fn fill(out: &mut Vec<Exponent>, cur: &mut Exponent, i: usize, left: u32) {
    if cur.is_empty() {
        if left == 0 {
            out.push(Vec::new());
        }
        return;
    }
    if i == cur.len() - 1 {
        cur[i] = left;
        out.push(cur.clone());
        cur[i] = 0;
        return;
    }
    for k in (0..=left).rev() {
        cur[i] = k;
        fill(out, cur, i + 1, left - k);
    }
    cur[i] = 0;
}

pub fn monomial_string(names: &[String], e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// Polynomial ring in named variables, as an evaluation target for expressions.
pub struct PolyRing<'a> {
    pub names: &'a [String],
}

impl<'a> PolyRing<'a> {
    pub fn parse(&self, s: &str) -> Result<Poly> {
        parse_expr(s)?.eval(self)
    }
}

impl<'a> EvalTarget for PolyRing<'a> {
    type V = Poly;

    fn constant(&self, q: &BigRational) -> Result<Poly> {
        let mut p = Poly::default();
        p.add_term(vec![0; self.names.len()], q.clone());
        Ok(p)
    }
    fn var(&self, name: &str) -> Result<Poly> {
        let i = self.names.iter().position(|n| n == name).ok_or_else(|| Error::Parse {
            input: name.to_string(),
            message: "unknown variable".into(),
        })?;
        let mut e = vec![0; self.names.len()];
        e[i] = 1;
        let mut p = Poly::default();
        p.add_term(e, BigRational::from_integer(1.into()));
        Ok(p)
    }
    fn add(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }
    fn neg(&self, a: &Poly) -> Result<Poly> {
        Ok(Poly { terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() })
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let mut out = Poly::default();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }
    fn scale(&self, a: &Poly, q: &BigRational) -> Result<Poly> {
        if q.is_zero() {
            return Ok(Poly::default());
        }
        Ok(Poly { terms: a.terms.iter().map(|(e, c)| (e.clone(), c * q)).collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_order() {
        // x > y > z: in degree 2, x^2 > xy > y^2 > xz > yz > z^2
        let m = monomials_of_degree(3, 2);
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let s: Vec<String> = m.iter().rev().map(|e| monomial_string(&names, e)).collect();
        assert_eq!(s, vec!["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"]);
    }

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(12, 4).len(), 1365);
    }

    #[test]
    fn parse_poly() {
        let names: Vec<String> = ["x", "y", "z", "u"].iter().map(|s| s.to_string()).collect();
        let r = PolyRing { names: &names };
        let p = r.parse("x^2+y*z").unwrap();
        assert_eq!(p.terms.len(), 2);
        assert_eq!(p.homogeneous_degree(), Some(2));
        let q = r.parse("(x+y)^2 - x^2 - 2*x*y - y^2").unwrap();
        assert!(q.is_zero());
        assert_eq!(r.parse("x + y^2").unwrap().homogeneous_degree(), None);
        assert!(r.parse("w").is_err());
    }
}
