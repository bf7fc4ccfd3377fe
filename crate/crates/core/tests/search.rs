use lindef_core::certify::{verify_witness, CertifyOptions, Witness, WitnessCerts};
use lindef_core::constructions::{build_presentation_strs, AlgebraSpec};
use lindef_core::search::{find_zero_divisor_pairs, search_witness, SearchConfig, SearchJob, SearchMode};

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn pairs_in_k_xy_mod_squares() {
    let a = build_presentation_strs(&strs(&["x", "y"]), &strs(&["x^2", "y^2"]), 3).unwrap();
    let cfg = SearchConfig { coefficient_pool: vec![-1, 1], max_support: 2, max_witnesses: None, ..Default::default() };
    let out = find_zero_divisor_pairs(&a, &cfg).unwrap();
    let mut got: Vec<(Vec<i64>, Vec<i64>)> = out.pairs.iter().map(|p| (p.l1.clone(), p.l2.clone())).collect();
    got.sort();
    let want = vec![
        (vec![0, 1], vec![0, 1]),
        (vec![1, -1], vec![1, 1]),
        (vec![1, 0], vec![1, 0]),
        (vec![1, 1], vec![1, -1]),
    ];
    assert_eq!(got, want);
    assert!(out.exhausted);
}

#[test]
fn s36_search_recovers_a_certified_witness() {
    let bundled = Witness::from_json(include_str!("../../../data/s36.json")).unwrap();
    let certs = WitnessCerts { k1: None, k2: None, l1: None, l2: None, ..bundled.certs.clone() };
    let config = SearchConfig { coefficient_pool: vec![-1, 1], max_support: 4, max_seconds: Some(600.0), ..Default::default() };
    let job = SearchJob { algebra: bundled.algebra.clone(), certs, config };
    let out = search_witness(&job, &mut |_| {}).unwrap();
    assert_eq!(out.witnesses.len(), 1, "{} forms, {} candidates", out.forms_examined, out.candidates.len());
    let w = &out.witnesses[0];
    let r = verify_witness(w, &CertifyOptions::default()).unwrap();
    assert!(r.verdict.is_certified(), "{}", r.to_text());
    // recovers the bundled pair of linear forms
    let pair = [w.l1.replace(' ', ""), w.l2.replace(' ', "")];
    assert!(pair.contains(&bundled.l1) && pair.contains(&bundled.l2), "{pair:?}");
}

#[test]
fn randomized_search_is_reproducible() {
    let cfg = SearchConfig {
        coefficient_pool: vec![-1, 1, 2],
        max_support: 3,
        mode: SearchMode::Randomized,
        seed: 11,
        max_candidates: 40,
        max_witnesses: None,
        ..Default::default()
    };
    let spec = AlgebraSpec::builtin("roos");
    let a = spec.build().unwrap();
    let one = find_zero_divisor_pairs(&a, &cfg).unwrap();
    let two = find_zero_divisor_pairs(&a, &cfg).unwrap();
    assert_eq!(one.pairs, two.pairs);
    assert_eq!(one.forms_examined, 40);
}
