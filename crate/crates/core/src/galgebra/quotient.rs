use super::algebra::{Algebra, AlgebraParts, Element, SparseCols, SparseVec};
use crate::error::{Error, Result};
use crate::exactla::{Field, Subspace};

fn dense<K: Field>(k: K, n: usize, v: &SparseVec<K::Elem>) -> Vec<K::Elem> {
    let mut out = vec![k.zero(); n];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

fn sparse<K: Field>(k: K, v: Vec<K::Elem>) -> SparseVec<K::Elem> {
    v.into_iter().enumerate().filter(|(_, x)| !k.is_zero(x)).collect()
}

/// `A / (forms)` for degree-1 forms. Coset representatives are the old basis
/// elements at non-pivot positions; surviving variables keep their names and
/// eliminated variables stay available as aliases.
pub fn quotient_by_linear_forms<K: Field>(a: &Algebra<K>, forms: &[Element<K::Elem>]) -> Result<Algebra<K>> {
    if let Some(f) = forms.iter().find(|f| f.degree != 1) {
        return Err(Error::Invalid(format!("quotient form of degree {} (expected 1)", f.degree)));
    }
    let k = a.field();
    let top = a.top();
    if forms.is_empty() || top == 0 {
        return Ok(a.clone());
    }
    let orbits: Vec<_> = forms.iter().map(|f| a.element_orbit(f, top - 1)).collect();
    let mut ideal: Vec<Subspace<K>> = vec![Subspace::zero(k, 1)];
    for d in 1..=top {
        let vecs: Vec<_> = orbits.iter().filter_map(|o| o.get(d - 1)).flatten().cloned().collect();
        ideal.push(Subspace::from_spanning(k, a.dims()[d], vecs));
    }
    let mut surv: Vec<Vec<usize>> = Vec::new();
    for s in &ideal {
        let np = s.non_pivots();
        if np.is_empty() {
            break;
        }
        surv.push(np);
    }
    let new_top = surv.len() - 1;
    let artinian = a.is_artinian() || new_top < top;
    let dims: Vec<usize> = surv.iter().map(|s| s.len()).collect();

    let mut mul = Vec::with_capacity(new_top);
    for d in 0..new_top {
        let mut md = Vec::with_capacity(dims[1]);
        for &j in &surv[1] {
            let old = a.mul_map(d, j);
            let cols = surv[d]
                .iter()
                .map(|&beta| sparse(k, ideal[d + 1].quotient_coords(&dense(k, old.rows, &old.cols[beta]))))
                .collect();
            md.push(SparseCols { rows: dims[d + 1], cols });
        }
        mul.push(md);
    }

    // images of the old variables in the new degree-1 coordinates
    let lambda: Vec<Vec<K::Elem>> = (0..a.num_vars()).map(|i| ideal[1].quotient_coords(&a.var(i).coords)).collect();

    let mut section = vec![Vec::new()];
    for d in 1..=new_top {
        let mut sd = Vec::with_capacity(dims[d]);
        for &beta in &surv[d] {
            if d == 1 {
                let jp = surv[1].iter().position(|&x| x == beta).expect("surviving variable");
                sd.push(vec![(jp, vec![(0, k.one())])]);
                continue;
            }
            let mut acc: Vec<Option<Vec<K::Elem>>> = vec![None; dims[1]];
            for (i, c) in a.section(d, beta) {
                let cbar = ideal[d - 1].quotient_coords(&dense(k, a.dims()[d - 1], c));
                for (jp, l) in lambda[*i].iter().enumerate() {
                    if k.is_zero(l) {
                        continue;
                    }
                    let slot = acc[jp].get_or_insert_with(|| vec![k.zero(); dims[d - 1]]);
                    for (s, x) in slot.iter_mut().zip(&cbar) {
                        k.add_mul_assign(s, l, x);
                    }
                }
            }
            let terms: Vec<(usize, SparseVec<K::Elem>)> = acc
                .into_iter()
                .enumerate()
                .filter_map(|(jp, v)| v.map(|v| (jp, sparse(k, v))))
                .filter(|(_, v)| !v.is_empty())
                .collect();
            if terms.is_empty() {
                return Err(Error::Invalid(format!("degree {d}: quotient basis element has an empty section")));
            }
            sd.push(terms);
        }
        section.push(sd);
    }

    let names: Vec<String> = surv[1].iter().map(|&j| a.var_names()[j].clone()).collect();
    let labels: Vec<Vec<String>> =
        surv.iter().enumerate().map(|(d, s)| s.iter().map(|&b| a.labels(d)[b].clone()).collect()).collect();
    let mut aliases: Vec<(String, Vec<K::Elem>)> = (0..a.num_vars())
        .filter(|i| !surv[1].contains(i))
        .map(|i| (a.var_names()[i].clone(), lambda[i].clone()))
        .collect();
    for (n, v) in a.aliases() {
        aliases.push((n.clone(), ideal[1].quotient_coords(v)));
    }
    let alg = Algebra::from_parts(AlgebraParts { field: k, names, dims, artinian, mul, section, labels })?;
    Ok(alg.with_aliases(aliases))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::galgebra::poly::PolyRing;
    use crate::galgebra::presentation::build_from_presentation;

    fn build(vars: &[&str], rels: &[&str], cap: usize) -> Algebra<Rationals> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let ring = PolyRing { names: &names };
        let rels: Vec<_> = rels.iter().map(|r| ring.parse(r).unwrap()).collect();
        build_from_presentation(&names, &rels, cap).unwrap()
    }

    #[test]
    fn matches_direct_presentation() {
        // k[x,y,z]/(x^2,y^2,z^2) modulo x - y is k[y,z]/(y^2,z^2)
        let a = build(&["x", "y", "z"], &["x^2", "y^2", "z^2"], 4);
        assert_eq!(a.dims(), &[1, 3, 3, 1]);
        let f = a.parse("x - y").unwrap();
        let q = quotient_by_linear_forms(&a, &[f]).unwrap();
        assert_eq!(q.dims(), &[1, 2, 1]);
        assert!(q.is_artinian());
        // x survives only as an alias equal to y
        let x = q.parse("x").unwrap();
        let y = q.parse("y").unwrap();
        assert_eq!(x, y);
        assert!(q.is_zero(&q.parse("y*y").unwrap()));
        assert!(!q.is_zero(&q.parse("y*z").unwrap()));
    }

    #[test]
    fn products_consistent_after_quotient() {
        let a = build(&["x", "y", "z", "u"], &["x^2", "x*y", "y^2", "z^2", "z*u", "u^2"], 4);
        let q = quotient_by_linear_forms(&a, &[a.parse("x+z").unwrap()]).unwrap();
        assert_eq!(q.num_vars(), 3);
        // associativity spot checks through the new section
        let e1 = q.parse("(y+u)*x").unwrap();
        let e2 = q.parse("y*x+u*x").unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn truncated_stays_truncated() {
        let a = build(&["x", "y"], &[], 4);
        let q = quotient_by_linear_forms(&a, &[a.parse("x").unwrap()]).unwrap();
        assert_eq!(q.dims(), &[1, 1, 1, 1, 1]);
        assert!(!q.is_artinian());
    }
}
