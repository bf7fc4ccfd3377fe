use std::sync::Arc;

use super::*;
use crate::constructions::{build_builtin, build_presentation_strs};
use crate::exactla::Rationals;
use crate::galgebra::{ideal_from_strs, Algebra, FreeMap, FreeModule};

type A = Arc<Algebra<Rationals>>;

fn alg(vars: &[&str], rels: &[&str], cap: usize) -> A {
    let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let r: Vec<String> = rels.iter().map(|s| s.to_string()).collect();
    Arc::new(build_presentation_strs(&v, &r, cap).unwrap())
}

fn opts() -> ResolveOptions {
    ResolveOptions::default()
}

/// Coefficients of `1 / q(t)` for `q(0) = 1`.
fn inverse_series(q: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n];
    for k in 0..n {
        let mut s = if k == 0 { 1 } else { 0 };
        for i in 1..q.len().min(k + 1) {
            s -= q[i] * out[k - i];
        }
        out[k] = s;
    }
    out
}

#[test]
fn dual_numbers_residue_field() {
    let a = alg(&["x"], &["x^2"], 3);
    let r = resolve(&GradedModule::residue_field(&a), 5, &opts()).unwrap();
    let b = r.betti();
    assert_eq!(b.totals(), vec![1; 6]);
    assert!(b.is_linear(0));
    assert!(b.all_exact());
    assert!(r.euler_ok);
}

#[test]
fn roos_residue_field() {
    let a = Arc::new(build_builtin("roos").unwrap());
    let r = resolve(&GradedModule::residue_field(&a), 3, &opts()).unwrap();
    // the Roos ring is quadratic monomial, hence Koszul: P(t) = 1 / H(-t)
    let oracle: Vec<usize> = inverse_series(&[1, -4, 4], 4).into_iter().map(|x| x as usize).collect();
    assert_eq!(r.betti().totals(), oracle);
    assert_eq!(oracle, vec![1, 4, 12, 32]);
    assert!(r.betti().is_linear(0));
    assert!(r.euler_ok);
}

#[test]
fn syzygy_of_exact_zero_divisor() {
    let a = alg(&["x"], &["x^2"], 3);
    let m = GradedModule::ideal(ideal_from_strs(&a, &["x"]).unwrap());
    let z = syzygy(&m, &opts()).unwrap();
    assert_eq!(z.min_gens(), vec![(2, 1)]);
    let free = GradedModule::free(&a, FreeModule::new(vec![0, 1]));
    assert!(syzygy(&free, &opts()).unwrap().is_zero());
}

#[test]
fn zero_module_resolution() {
    let a = alg(&["x"], &["x^2"], 3);
    let m = GradedModule::ideal(ideal_from_strs(&a, &["0"]).unwrap());
    let r = resolve(&m, 3, &opts()).unwrap();
    assert_eq!(r.betti().totals(), vec![0, 0, 0, 0]);
    assert_eq!(poincare_partial(&GradedModule::free(&a, FreeModule::new(vec![0, 0])), 3, &opts()).unwrap(), vec![
        2, 0, 0, 0
    ]);
}

#[test]
fn linear_part_of_exact_zero_divisor_vanishes() {
    let a = alg(&["x"], &["x^2"], 3);
    let m = GradedModule::ideal(ideal_from_strs(&a, &["x"]).unwrap());
    let rep = linear_part_homology(&m, 6, &opts()).unwrap();
    assert_eq!(rep.method, LinPartMethod::Full);
    assert!(rep.zero_through(6));
    assert_eq!(rep.lind_lower_bound, 0);
}

#[test]
fn roos_linear_part_nonzero() {
    let a = Arc::new(build_builtin("roos").unwrap());
    let m = GradedModule::ideal(ideal_from_strs(&a, &["x-z"]).unwrap());
    let full = linear_part_homology(&m, 6, &opts()).unwrap();
    assert_eq!(full.method, LinPartMethod::Full);
    assert!(full.nonzero_through(6), "{:?}", full.homology_dims);
    let strand = linear_part_strand(&m, 6, &opts()).unwrap();
    assert!(strand.nonzero_through(6));
    assert_eq!(strand.strand_ranks, vec![1; 8]);
    // the strand is a direct summand
    for i in 1..=6 {
        assert!(strand.homology_dims[i] <= full.homology_dims[i]);
    }
}

#[test]
fn roos_splitting() {
    let a = Arc::new(build_builtin("roos").unwrap());
    let m = ideal_from_strs(&a, &["y*u", "x+z"]).unwrap();
    let m1 = ideal_from_strs(&a, &["y*u"]).unwrap();
    let m2 = ideal_from_strs(&a, &["x+z"]).unwrap();
    let rep = betti_splitting_numeric(&m, &m1, &m2, 3, &opts()).unwrap();
    assert!(rep.holds, "{:?}", rep.rows);
    let trivial = betti_splitting_numeric(&m, &m, &ideal_from_strs(&a, &["0"]).unwrap(), 3, &opts()).unwrap();
    assert!(trivial.holds);
    assert!(betti_splitting_numeric(&m, &m1, &m1, 2, &opts()).is_err());
}

#[test]
fn conca_summand_failure() {
    let a = Arc::new(build_builtin("conca").unwrap());
    let u = ideal_from_strs(&a, &["y", "x-u", "z^2"]).unwrap();
    let y = ideal_from_strs(&a, &["y"]).unwrap();
    let rows = summand_betti_check(&u, &y, 1, &opts()).unwrap();
    assert_eq!((rows[1].beta_u, rows[1].beta_sub, rows[1].beta_quotient), (7, 3, 5));
    assert!(!rows[1].holds);
}

#[test]
fn conca_image_regularity() {
    let a = Arc::new(build_builtin("conca").unwrap());
    let e = |s: &str| a.parse(s).unwrap();
    let phi = FreeMap::from_matrix(&a, FreeModule::new(vec![0, 0]), vec![1, 1], &[
        vec![e("-x"), e("y")],
        vec![e("z"), e("x")],
    ])
    .unwrap();
    let m = GradedModule::image(&a, &phi).unwrap();
    assert_eq!(m.min_gens(), vec![(1, 2)]);
    let r = resolve(&m, 4, &opts()).unwrap();
    let b = r.betti();
    assert_eq!(b.t(1), Some(3));
    assert_eq!(b.regularity(), Some(2));
    assert!(r.euler_ok);
}

#[test]
fn betti_display_and_json() {
    let a = alg(&["x"], &["x^2"], 3);
    let b = resolve(&GradedModule::residue_field(&a), 2, &opts()).unwrap().betti();
    let s = b.to_string();
    assert!(s.contains("total:"));
    let j = b.to_json();
    assert_eq!(j["betti"]["2,2"], 1);
}

#[test]
fn truncated_ring_marks_inexact_entries() {
    let a = alg(&["x", "y"], &[], 3);
    let r = resolve(&GradedModule::residue_field(&a), 2, &opts()).unwrap();
    let b = r.betti();
    assert_eq!(b.totals(), vec![1, 2, 1]);
    assert!(!b.all_exact());
    assert!(r.euler_ok);
}
