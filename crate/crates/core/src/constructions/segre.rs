//! Artinian reductions of Segre products `k[x_1..x_m] * k[y_1..y_n]`.

use num_rational::BigRational;
use num_traits::Zero;

use super::hpoly::h_poly_segre;
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rationals};
use crate::galgebra::algebra::Algebra;
use crate::galgebra::expr::EvalTarget;
use crate::galgebra::poly::{Poly, PolyRing};
use crate::galgebra::presentation::build_from_presentation;

/// The regular sequence used for `S(3,6)`.
pub const J_S36: [&str; 8] = [
    "z11",
    "z12-z21",
    "z13-z22-z31",
    "z14-z23-z32",
    "z15-z24-z33",
    "z16-z25-z34",
    "z26-z35",
    "z36",
];

/// The regular sequence used for `S(4,5)`.
pub const J_S45: [&str; 8] = [
    "z11",
    "z12-z21",
    "z13-z22-z31",
    "z14-z23-z32-z41",
    "z15-z24-z33-z42",
    "z25-z34-z43",
    "z35-z44",
    "z45",
];

/// The matrix whose 2-minors define `S(3,6)/J` in the surviving variables.
pub const MATRIX_S36: [[&str; 6]; 3] = [
    ["0", "a1", "a2+a6", "a3+a7", "a4+a8", "a5+a9"],
    ["a1", "a2", "a3", "a4", "a5", "a10"],
    ["a6", "a7", "a8", "a9", "a10", "0"],
];

pub const MATRIX_S45: [[&str; 5]; 4] = [
    ["0", "a1", "a2+a5", "a3+a6+a9", "a4+a7+a10"],
    ["a1", "a2", "a3", "a4", "a8+a11"],
    ["a5", "a6", "a7", "a8", "a12"],
    ["a9", "a10", "a11", "a12", "0"],
];

/// 2-minors of a matrix of linear-form expressions, as strings.
pub fn two_minors<R: AsRef<[&'static str]>>(rows: &[R]) -> Vec<String> {
    let mut out = Vec::new();
    for i in 0..rows.len() {
        for k in i + 1..rows.len() {
            let (ri, rk) = (rows[i].as_ref(), rows[k].as_ref());
            for j in 0..ri.len() {
                for l in j + 1..ri.len() {
                    out.push(format!("({})*({})-({})*({})", ri[j], rk[l], ri[l], rk[j]));
                }
            }
        }
    }
    out
}

fn names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("a{i}")).collect()
}

fn from_matrix<R: AsRef<[&'static str]>>(rows: &[R], nvars: usize, cap: usize) -> Result<Algebra<Rationals>> {
    let names = names(nvars);
    let ring = PolyRing { names: &names };
    let rels = two_minors(rows).iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
    build_from_presentation(&names, &rels, cap)
}

/// `S(3,6)/J` from the hard-coded matrix, over `a_1..a_10`.
pub fn segre_s36() -> Result<Algebra<Rationals>> {
    from_matrix(&MATRIX_S36, 10, 4)
}

/// `S(4,5)/J` from the hard-coded matrix, over `a_1..a_12`.
pub fn segre_s45() -> Result<Algebra<Rationals>> {
    from_matrix(&MATRIX_S45, 12, 5)
}

/// Generic `S(m,n)` modulo linear forms `J` in the variables `z_ij`.
///
/// Each form eliminates its lowest variable in the order `z11 < z12 < ... < z_mn`
/// (after joint row reduction); the survivors are renamed `a_1, a_2, ...` in that
/// order. With `m+n-1` independent forms the result must be artinian with the
/// closed-form h-vector; with fewer, it is truncated at `cap`.
pub fn segre_artinian(m: usize, n: usize, j: &[String], cap: usize) -> Result<Algebra<Rationals>> {
    if m < 1 || m > n {
        return Err(Error::Invalid(format!("segre needs 1 <= m <= n (got {m}, {n})")));
    }
    if n > 9 {
        return Err(Error::Invalid("segre variable names z_ij need m, n <= 9".into()));
    }
    let zn: Vec<String> = (1..=m).flat_map(|i| (1..=n).map(move |k| format!("z{i}{k}"))).collect();
    let zring = PolyRing { names: &zn };
    let nz = zn.len();
    let mut rows = Vec::with_capacity(j.len());
    for f in j {
        let p = zring.parse(f)?;
        if p.is_zero() {
            continue;
        }
        if p.homogeneous_degree() != Some(1) {
            return Err(Error::Invalid(format!("J element `{f}` is not a linear form")));
        }
        let mut row = vec![BigRational::zero(); nz];
        for (e, c) in &p.terms {
            let i = e.iter().position(|&x| x == 1).expect("linear term");
            row[i] = c.clone();
        }
        rows.push(row);
    }
    let (red, pivots) = Mat::from_rows(Rationals, nz, rows).rref_with_pivots();
    let red = red.to_rows();
    let survivors: Vec<usize> = (0..nz).filter(|c| !pivots.contains(c)).collect();
    let anames = names(survivors.len());
    let aring = PolyRing { names: &anames };

    // z_c as a linear polynomial in the survivors
    let mut image: Vec<Poly> = Vec::with_capacity(nz);
    for c in 0..nz {
        let expr = if let Some(s) = survivors.iter().position(|&x| x == c) {
            anames[s].clone()
        } else {
            let r = &red[pivots.iter().position(|&p| p == c).unwrap()];
            let terms: Vec<String> = survivors
                .iter()
                .enumerate()
                .filter(|(_, &q)| !r[q].is_zero())
                .map(|(s, &q)| format!("({})*{}", -r[q].clone(), anames[s]))
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+")
            }
        };
        image.push(aring.parse(&expr)?);
    }
    let mut rels = Vec::new();
    let z = |i: usize, k: usize| &image[i * n + k];
    for i in 0..m {
        for i2 in i + 1..m {
            for k in 0..n {
                for k2 in k + 1..n {
                    let a = aring.mul(z(i, k), z(i2, k2))?;
                    let b = aring.mul(z(i, k2), z(i2, k))?;
                    let r = aring.add(&a, &aring.neg(&b)?)?;
                    if !r.is_zero() {
                        rels.push(r);
                    }
                }
            }
        }
    }
    let full = pivots.len() == m + n - 1;
    let cap = if full { cap.max(m + 1) } else { cap };
    let alg = build_from_presentation(&anames, &rels, cap)?;
    if full {
        let h = h_poly_segre(m, n);
        let dims: Vec<i64> = alg.dims().iter().map(|&d| d as i64).collect();
        if !alg.is_artinian() || dims != h.coeffs {
            return Err(Error::Invalid(format!(
                "J is not a regular sequence: Hilbert function {:?} differs from the h-vector {:?}",
                alg.dims(),
                h.coeffs
            )));
        }
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn j(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn hard_coded_s36() {
        let a = segre_s36().unwrap();
        assert_eq!(a.dims(), &[1, 10, 10]);
        assert!(a.is_artinian());
    }

    #[test]
    fn generic_path_matches_hard_coded_s36() {
        let g = segre_artinian(3, 6, &j(&J_S36), 4).unwrap();
        let h = segre_s36().unwrap();
        assert_eq!(g.dims(), h.dims());
        // every hard-coded minor vanishes in the generic construction
        for r in two_minors(&MATRIX_S36) {
            assert!(g.is_zero(&g.parse(&r).unwrap()), "{r}");
        }
    }

    #[test]
    fn small_cases() {
        let a = segre_artinian(2, 3, &j(&["z11", "z12-z21", "z13-z22", "z23"]), 4).unwrap();
        assert_eq!(a.dims(), &[1, 2]);
        let b = segre_artinian(1, 2, &j(&["z11-z12"]), 4).unwrap();
        assert!(!b.is_artinian());
        assert_eq!(b.dims(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn non_regular_sequence_rejected() {
        // z11 twice in disguise: the span is too small, and z11, z12, z21, z22 kill too much
        let bad = j(&["z11", "z12", "z21", "z22"]);
        assert!(segre_artinian(2, 2, &bad[..3], 4).is_err());
        assert!(segre_artinian(2, 2, &j(&["z11", "z12-z21", "x"]), 4).is_err());
    }
}
