mod common;

use common::*;

#[test]
fn subspaces() {
    subspace_dimension_law(CASES).unwrap();
}

#[test]
fn multiplication() {
    multiplication_laws(CASES).unwrap();
}

#[test]
fn colons() {
    colon_reciprocity(CASES).unwrap();
}

#[test]
fn resolutions() {
    syzygy_resolve_consistency(CASES).unwrap();
}

#[test]
fn witness_swap() {
    witness_swap_symmetry(CASES).unwrap();
}
