use lindef_core::constructions::*;

fn dims(spec: AlgebraSpec) -> Vec<usize> {
    spec.build().unwrap().dims().to_vec()
}

fn q(name: &str, forms: &[&str]) -> AlgebraSpec {
    AlgebraSpec::builtin(name).with_quotient(&forms.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

#[test]
fn segre_hilbert_functions() {
    assert_eq!(dims(AlgebraSpec::builtin("s36")), vec![1, 10, 10]);
    assert_eq!(dims(AlgebraSpec::builtin("s45")), vec![1, 12, 18, 4]);
    assert_eq!(dims(q("s45", &["a12"])), vec![1, 11, 12, 1]);
}

#[test]
fn veronese_hilbert_functions() {
    assert_eq!(dims(AlgebraSpec::builtin("v72")), vec![1, 21, 35, 7]);
    assert_eq!(dims(q("v72", &["a21"])), vec![1, 20, 25, 2]);
    assert_eq!(dims(AlgebraSpec::builtin("v53")), vec![1, 30, 45, 5]);
    assert_eq!(dims(q("v53", &["a30"])), vec![1, 29, 32, 1]);
    assert_eq!(dims(AlgebraSpec::builtin("v54")), vec![1, 65, 155, 35]);
    assert_eq!(dims(q("v54", &["a60", "a61", "a62", "a63", "a64", "a65"])), vec![1, 59, 63, 1]);
    assert_eq!(dims(AlgebraSpec::builtin("v45")), vec![1, 52, 68, 4]);
    assert_eq!(dims(q("v45", &["a52"])), vec![1, 51, 52, 1]);
}

#[test]
fn segre_general_path_s45_matches_matrix() {
    let j: Vec<String> = J_S45.iter().map(|s| s.to_string()).collect();
    let g = segre_artinian(4, 5, &j, 5).unwrap();
    let h = segre_s45().unwrap();
    assert_eq!(g.dims(), h.dims());
    for r in two_minors(&MATRIX_S45) {
        assert!(g.is_zero(&g.parse(&r).unwrap()), "{r}");
    }
}

#[test]
fn closed_forms_match_artinian_reductions() {
    for n in 1..=5 {
        for c in 2..=5 {
            let a = veronese_artinian(n, c).unwrap();
            assert_eq!(HPolynomial::from_dims(a.dims()), h_poly_veronese(n, c), "V({n},{c})");
        }
    }
    // anti-diagonal sums z_{1k} - z_{2,k-1} - ... give a regular sequence of length m+n-1
    for m in 1..=6usize {
        for n in m..=6usize {
            let mut j = Vec::new();
            for s in 2..=m + n {
                let terms: Vec<String> =
                    (1..=m).filter(|&i| s > i && s - i <= n).map(|i| format!("z{}{}", i, s - i)).collect();
                let mut f = terms[0].clone();
                for t in &terms[1..] {
                    f.push_str(&format!("-{t}"));
                }
                j.push(f);
            }
            let a = segre_artinian(m, n, &j, m + 1).unwrap();
            assert_eq!(HPolynomial::from_dims(a.dims()), h_poly_segre(m, n), "S({m},{n})");
        }
    }
}
