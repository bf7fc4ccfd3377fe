//! Artinian reductions of Veronese subrings as monomial algebras.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactla::Rationals;
use crate::galgebra::algebra::{Algebra, AlgebraParts, SparseCols};
use crate::galgebra::poly::{monomial_string, monomials_of_degree, Exponent};

/// `k[x_1..x_n]^{(c)} / (x_n^c, ..., x_1^c)`.
///
/// Variables `a_1, a_2, ...` are the degree-`c` monomials that are not pure powers,
/// in ascending degree-reverse-lexicographic order, so `a_1 = x_n^{c-1} x_{n-1}`.
/// The degree-`d` basis is the monomials of degree `dc` with all exponents below `c`.
pub fn veronese_artinian(n: usize, c: usize) -> Result<Algebra<Rationals>> {
    if n < 1 || c < 2 {
        return Err(Error::Invalid(format!("veronese_artinian needs n >= 1 and c >= 2 (got n={n}, c={c})")));
    }
    let cc = c as u32;
    let vars: Vec<Exponent> = monomials_of_degree(n, cc).into_iter().filter(|e| e.iter().all(|&x| x < cc)).collect();
    let names: Vec<String> = (1..=vars.len()).map(|i| format!("a{i}")).collect();
    let var_index: HashMap<&Exponent, usize> = vars.iter().enumerate().map(|(i, e)| (e, i)).collect();

    let mut bases: Vec<Vec<Exponent>> = vec![vec![vec![0; n]]];
    loop {
        let d = bases.len() as u32;
        let b: Vec<Exponent> = monomials_of_degree(n, d * cc).into_iter().filter(|e| e.iter().all(|&x| x < cc)).collect();
        if b.is_empty() {
            break;
        }
        bases.push(b);
    }
    let top = bases.len() - 1;
    let index: Vec<HashMap<&Exponent, usize>> =
        bases.iter().map(|b| b.iter().enumerate().map(|(i, e)| (e, i)).collect()).collect();

    let mut mul = Vec::with_capacity(top);
    for d in 0..top {
        let mut md = Vec::with_capacity(vars.len());
        for v in &vars {
            let cols = bases[d]
                .iter()
                .map(|m| {
                    let p: Exponent = m.iter().zip(v).map(|(a, b)| a + b).collect();
                    match index[d + 1].get(&p) {
                        Some(&j) => vec![(j, BigRational::one())],
                        None => Vec::new(),
                    }
                })
                .collect();
            md.push(SparseCols { rows: bases[d + 1].len(), cols });
        }
        mul.push(md);
    }

    let mut section = vec![Vec::new()];
    let mut labels = vec![vec!["1".to_string()]];
    for d in 1..=top {
        let mut sd = Vec::with_capacity(bases[d].len());
        let mut ld = Vec::with_capacity(bases[d].len());
        for m in &bases[d] {
            let (v, rest) = split_first_letters(m, cc);
            let vi = var_index[&v];
            sd.push(vec![(vi, vec![(index[d - 1][&rest], BigRational::one())])]);
            ld.push(if d == 1 { names[vi].clone() } else { word_label(m, cc, &var_index, &names) });
        }
        section.push(sd);
        labels.push(ld);
    }
    Algebra::from_parts(AlgebraParts {
        field: Rationals,
        names,
        dims: bases.iter().map(|b| b.len()).collect(),
        artinian: true,
        mul,
        section,
        labels,
    })
}

/// Degree-`c` monomials used as variables, with their `x`-monomial spelling.
pub fn veronese_variable_monomials(n: usize, c: usize) -> Vec<(String, String)> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    monomials_of_degree(n, c as u32)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x < c as u32))
        .enumerate()
        .map(|(i, e)| (format!("a{}", i + 1), monomial_string(&names, &e)))
        .collect()
}

/// Splits off the first `c` letters of the word `x_1^{e_1} x_2^{e_2} ...`.
fn split_first_letters(m: &[u32], c: u32) -> (Exponent, Exponent) {
    let mut take = vec![0u32; m.len()];
    let mut left = c;
    for (i, &e) in m.iter().enumerate() {
        let t = e.min(left);
        take[i] = t;
        left -= t;
        if left == 0 {
            break;
        }
    }
    let rest = m.iter().zip(&take).map(|(a, b)| a - b).collect();
    (take, rest)
}

fn word_label(m: &[u32], c: u32, var_index: &HashMap<&Exponent, usize>, names: &[String]) -> String {
    let mut parts = Vec::new();
    let mut cur: Exponent = m.to_vec();
    while cur.iter().any(|&x| x > 0) {
        let (v, rest) = split_first_letters(&cur, c);
        parts.push(names[var_index[&v]].clone());
        cur = rest;
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case() {
        let a = veronese_artinian(2, 2).unwrap();
        assert_eq!(a.dims(), &[1, 1]);
        assert!(a.is_zero(&a.parse("a1*a1").unwrap()));
        assert_eq!(veronese_variable_monomials(2, 2), vec![("a1".to_string(), "x1*x2".to_string())]);
    }

    #[test]
    fn first_variable_is_xn_power_times_previous() {
        let v = veronese_variable_monomials(7, 2);
        assert_eq!(v.len(), 21);
        assert_eq!(v[0].1, "x6*x7");
        let v = veronese_variable_monomials(4, 5);
        assert_eq!(v[0].1, "x3*x4^4");
    }

    #[test]
    fn hilbert_functions() {
        assert_eq!(veronese_artinian(7, 2).unwrap().dims(), &[1, 21, 35, 7]);
        assert_eq!(veronese_artinian(5, 3).unwrap().dims(), &[1, 30, 45, 5]);
        assert_eq!(veronese_artinian(4, 5).unwrap().dims(), &[1, 52, 68, 4]);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(veronese_artinian(0, 2).is_err());
        assert!(veronese_artinian(3, 1).is_err());
    }
}
