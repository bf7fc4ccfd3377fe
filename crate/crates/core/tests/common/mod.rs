//! Seeded property runners shared by `properties.rs` and the acceptance target.

use std::sync::Arc;

use lindef_core::certify::{verify_witness, CertifyOptions, Witness};
use lindef_core::constructions::{build_builtin, build_presentation_strs, AlgebraSpec};
use lindef_core::exactla::{Field, Rationals, Subspace};
use lindef_core::galgebra::{ideal, Algebra, Element};
use lindef_core::{resolve, GradedModule, ResolveOptions};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type A = Algebra<Rationals>;
type E = Element<<Rationals as Field>::Elem>;

pub const CASES: u32 = 1000;

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, max_shrink_iters: 200, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// Small artinian rings with varied shapes.
pub fn rings() -> Vec<Arc<A>> {
    vec![
        Arc::new(build_builtin("roos").unwrap()),
        Arc::new(build_presentation_strs(&strs(&["x", "y", "z"]), &strs(&["x^2", "y^2", "z^2"]), 4).unwrap()),
        Arc::new(build_presentation_strs(&strs(&["x", "y", "z"]), &strs(&["x*y", "z^2", "x^2-y*z"]), 5).unwrap()),
        Arc::new(build_presentation_strs(&strs(&["x", "y"]), &strs(&["x^3", "y^2"]), 5).unwrap()),
    ]
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn lift<T>(r: lindef_core::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

fn finish<V: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<V>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// `dim(U + V) + dim(U ∩ V) = dim U + dim V`.
pub fn subspace_dimension_law(cases: u32) -> Result<(), String> {
    let strat = (1usize..8).prop_flat_map(|n| {
        let v = prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..6);
        (Just(n), v.clone(), v)
    });
    let k = Rationals;
    finish(runner(cases).run(&strat, |(n, u, v)| {
        let conv = |vs: &Vec<Vec<i64>>| vs.iter().map(|r| r.iter().map(|&x| k.from_i64(x)).collect()).collect();
        let u = Subspace::from_spanning(k, n, conv(&u));
        let v = Subspace::from_spanning(k, n, conv(&v));
        let s = lift(u.sum(&v))?;
        let i = lift(u.intersect(&v))?;
        check(s.dim() + i.dim() == u.dim() + v.dim(), || format!("{} + {} != {} + {}", s.dim(), i.dim(), u.dim(), v.dim()))?;
        check(s.contains_subspace(&u) && s.contains_subspace(&v), || "sum misses a summand".into())?;
        check(u.contains_subspace(&i) && v.contains_subspace(&i), || "intersection escapes".into())
    }))
}

fn random_in(a: &A, d: usize, seed: u64) -> E {
    a.random_element(d, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Associativity, commutativity and distributivity of the multiplication.
pub fn multiplication_laws(cases: u32) -> Result<(), String> {
    let rs = rings();
    let strat = (0..rs.len(), 0usize..4, 0usize..4, 0usize..4, any::<u64>());
    finish(runner(cases).run(&strat, |(r, d1, d2, d3, seed)| {
        let a = &rs[r];
        // products past a truncation are unknown, so stay below it there
        let top = a.top();
        let (d1, d2, d3) = if a.is_artinian() {
            (d1.min(top), d2.min(top), d3.min(top))
        } else {
            let d1 = d1.min(top);
            let d2 = d2.min(top - d1);
            (d1, d2, d3.min(top - d1 - d2))
        };
        let x = random_in(a, d1, seed);
        let y = random_in(a, d2, seed ^ 1);
        let z = random_in(a, d3, seed ^ 2);
        let w = random_in(a, d2, seed ^ 3);
        let xy = lift(a.mul(&x, &y))?;
        check(xy == lift(a.mul(&y, &x))?, || "xy != yx".into())?;
        check(lift(a.mul(&xy, &z))? == lift(a.mul(&x, &lift(a.mul(&y, &z))?))?, || "(xy)z != x(yz)".into())?;
        let lhs = lift(a.mul(&x, &lift(a.add(&y, &w))?))?;
        let rhs = lift(a.add(&xy, &lift(a.mul(&x, &w))?))?;
        check(lhs == rhs, || "x(y+w) != xy+xw".into())
    }))
}

/// `g ∈ (I : f)` iff `g f ∈ I`, and `((I : f) : h) = (I : f h)`.
pub fn colon_reciprocity(cases: u32) -> Result<(), String> {
    let rs = rings();
    let strat = (0..rs.len(), prop::collection::vec(1usize..3, 1..3), 1usize..3, 0usize..3, any::<u64>());
    finish(runner(cases).run(&strat, |(r, gdeg, fdeg, gd, seed)| {
        let a = &rs[r];
        let gens: Vec<E> = gdeg.iter().enumerate().map(|(j, &d)| random_in(a, d, seed.wrapping_add(j as u64))).collect();
        let i = lift(ideal(a, &gens))?;
        let f = random_in(a, fdeg, seed ^ 0xf);
        let h = random_in(a, 1, seed ^ 0x11);
        let j = lift(i.colon(&f))?;
        for t in 0..=gd.min(a.top()) {
            let g = random_in(a, t, seed ^ (0x100 + t as u64));
            let inside = lift(j.contains(&g))?;
            let prod = lift(a.mul(&g, &f))?;
            check(inside == lift(i.contains(&prod))?, || format!("membership of a degree-{t} element disagrees"))?;
        }
        let fh = lift(a.mul(&f, &h))?;
        let left = lift(j.colon(&h))?;
        let right = lift(i.colon(&fh))?;
        check(lift(left.equals(&right))?, || "((I:f):h) != (I:fh)".into())
    }))
}

/// Resolutions are complexes, satisfy rank-nullity degreewise, and agree with
/// resolving the first syzygy.
pub fn syzygy_resolve_consistency(cases: u32) -> Result<(), String> {
    let rs = rings();
    let opts = ResolveOptions::default();
    let strat = (0..rs.len(), prop::collection::vec(1usize..3, 1..3), any::<u64>());
    finish(runner(cases).run(&strat, |(r, gdeg, seed)| {
        let a = &rs[r];
        let gens: Vec<E> = gdeg.iter().enumerate().map(|(j, &d)| random_in(a, d, seed.wrapping_add(j as u64))).collect();
        let i = lift(ideal(a, &gens))?;
        let m = GradedModule::ideal(i);
        let res = lift(resolve(&m, 3, &opts))?;
        check(res.euler_ok, || "rank-nullity failed".into())?;
        for w in res.differentials.windows(2) {
            check(lift(w[0].composes_to_zero(a.as_ref(), &w[1]))?, || "d_i d_{i+1} != 0".into())?;
        }
        check(res.betti().totals()[0] == m.min_gen_elements().len(), || "beta_0 != number of minimal generators".into())?;
        let z = lift(lindef_core::resolution::syzygy(&m, &opts))?;
        let rz = lift(resolve(&z, 2, &opts))?;
        let (b, bz) = (res.betti(), rz.betti());
        for k in 0..=2 {
            check(b.betti[k + 1] == bz.betti[k], || format!("beta_{} of M differs from beta_{k} of its syzygy", k + 1))?;
        }
        Ok(())
    }))
}

/// The verdict of a random witness over the Roos ring is unchanged by
/// exchanging `(l1, K1)` and `(l2, K2)`.
pub fn witness_swap_symmetry(cases: u32) -> Result<(), String> {
    let opts = CertifyOptions { numeric_cutoff: None, ..CertifyOptions::default() };
    let vars = ["x", "y", "z", "u"];
    let quads = ["y*u", "x*z", "x*u", "y*z", "x*z+y*u", "y*u-x*u", "u^2"];
    let form = |c: &[i64]| {
        let mut s = String::new();
        for (v, &k) in vars.iter().zip(c) {
            if k != 0 {
                s.push_str(&format!("{:+}*{v}", k));
            }
        }
        if s.is_empty() {
            "x".into()
        } else {
            s
        }
    };
    let lin = prop::collection::vec(-1i64..=1, 4);
    let ks = prop::collection::vec(prop::sample::select(quads.to_vec()), 0..3);
    // half the cases perturb the known witness x-z, x+z
    let strat = (any::<bool>(), lin.clone(), lin, ks.clone(), ks);
    finish(runner(cases).run(&strat, |(near, c1, c2, k1, k2)| {
        let (l1, l2) = if near { ("x-z".to_string(), form(&c2)) } else { (form(&c1), form(&c2)) };
        let w = Witness {
            name: "random".into(),
            algebra: AlgebraSpec::builtin("roos"),
            perm: None,
            l1,
            l2,
            k1: k1.iter().map(|s| s.to_string()).collect(),
            k2: k2.iter().map(|s| s.to_string()).collect(),
            certs: Default::default(),
        };
        let a = lift(verify_witness(&w, &opts))?.verdict;
        let b = lift(verify_witness(&w.swapped(), &opts))?.verdict;
        check(a == b, || format!("{a:?} vs {b:?} for {} / {}", w.l1, w.l2))
    }))
}

#[allow(dead_code)]
pub const PROPERTIES: [(&str, fn(u32) -> Result<(), String>); 5] = [
    ("subspace dimension law", subspace_dimension_law),
    ("multiplication laws", multiplication_laws),
    ("colon reciprocity", colon_reciprocity),
    ("syzygy/resolve consistency", syzygy_resolve_consistency),
    ("witness swap symmetry", witness_swap_symmetry),
];
