//! Finitely generated graded modules presented as subquotients `M/N` of a free module.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{Field, Subspace};
use crate::galgebra::{Algebra, Element, FreeMap, FreeModule, GradedIdeal, Submodule};

/// `M/N` with `N ⊆ M ⊆ G` graded submodules of one free module `G`.
#[derive(Clone, Debug)]
pub struct GradedModule<K: Field> {
    m: Submodule<K>,
    n: Submodule<K>,
}

impl<K: Field> GradedModule<K> {
    pub fn new(m: Submodule<K>, n: Submodule<K>) -> Result<Self> {
        if !m.contains_submodule(&n)? {
            return Err(Error::Invalid("relation module is not contained in the module".into()));
        }
        Ok(GradedModule { m, n })
    }

    /// The submodule itself (`N = 0`).
    pub fn submodule(m: Submodule<K>) -> Self {
        let n = Submodule::zero(m.algebra(), m.free().clone());
        let n = n.truncate(m.top());
        GradedModule { m, n }
    }

    /// `I` as a module.
    pub fn ideal(i: GradedIdeal<K>) -> Self {
        Self::submodule(i)
    }

    /// `A/I`.
    pub fn cyclic_quotient(i: GradedIdeal<K>) -> Self {
        let m = Submodule::full(i.algebra(), FreeModule::ring()).truncate(i.top());
        GradedModule { m, n: i }
    }

    /// The residue field `A/A_+`.
    pub fn residue_field(alg: &Arc<Algebra<K>>) -> Self {
        Self::cyclic_quotient(crate::galgebra::maximal_ideal(alg))
    }

    /// Free module `F` itself.
    pub fn free(alg: &Arc<Algebra<K>>, free: FreeModule) -> Self {
        Self::submodule(Submodule::full(alg, free))
    }

    /// `Im φ ⊆ G`.
    pub fn image(alg: &Arc<Algebra<K>>, phi: &FreeMap<K::Elem>) -> Result<Self> {
        Ok(Self::submodule(phi.image(alg)?))
    }

    /// `coker φ = G / Im φ`.
    pub fn cokernel(alg: &Arc<Algebra<K>>, phi: &FreeMap<K::Elem>) -> Result<Self> {
        let n = phi.image(alg)?;
        let m = Submodule::full(alg, phi.target.clone()).truncate(n.top());
        Ok(GradedModule { m, n })
    }

    /// `M/N` for two submodules with `N ⊆ M`.
    pub fn quotient(m: &Submodule<K>, n: &Submodule<K>) -> Result<Self> {
        Self::new(m.clone(), n.clone())
    }

    pub fn algebra(&self) -> &Arc<Algebra<K>> {
        self.m.algebra()
    }
    pub fn ambient(&self) -> &FreeModule {
        self.m.free()
    }
    pub fn numerator(&self) -> &Submodule<K> {
        &self.m
    }
    pub fn relations(&self) -> &Submodule<K> {
        &self.n
    }

    /// Last internal degree where both `M` and `N` are known.
    pub fn top(&self) -> usize {
        self.m.top().min(self.n.top())
    }

    pub fn is_exact(&self) -> bool {
        self.m.is_exact() && self.n.is_exact()
    }

    /// `dim (M/N)_t` through `top`.
    pub fn hilbert(&self) -> Vec<usize> {
        (0..=self.top()).map(|t| self.m.dim_at(t) - self.n.dim_at(t)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.hilbert().iter().all(|&d| d == 0)
    }

    /// Representatives of minimal generators, lowest degree first.
    pub fn min_gen_elements(&self) -> Vec<Element<K::Elem>> {
        let mut out = Vec::new();
        for t in 0..=self.top() {
            let mt = self.m.piece(t).expect("known degree");
            if mt.dim() == self.n.dim_at(t) {
                continue;
            }
            let lower = self.m.linear_multiples(t).sum(self.n.piece(t).expect("known degree")).expect("same ambient");
            for v in mt.complement_of(&lower) {
                out.push(Element { degree: t, coords: v });
            }
        }
        out
    }

    /// `(degree, count)` of minimal generators.
    pub fn min_gens(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for g in self.min_gen_elements() {
            match out.last_mut() {
                Some((d, c)) if *d == g.degree => *c += 1,
                _ => out.push((g.degree, 1)),
            }
        }
        out
    }

    /// `(M/N) / (N'/N) = M/N'`.
    pub fn modulo(&self, n2: &Submodule<K>) -> Result<Self> {
        let n = n2.sum(&self.n)?;
        Self::new(self.m.clone(), n)
    }

    /// `M/N` restricted to degrees `≤ top` (and marked inexact beyond it).
    pub fn truncate(&self, top: usize) -> Self {
        GradedModule { m: self.m.truncate(top), n: self.n.truncate(top) }
    }

    /// Relations subspace in degree `t`.
    pub(crate) fn relation_piece(&self, t: usize) -> &Subspace<K> {
        self.n.piece(t).expect("known degree")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_presentation_strs;
    use crate::exactla::Rationals;
    use crate::galgebra::ideal_from_strs;

    fn alg(vars: &[&str], rels: &[&str], cap: usize) -> Arc<Algebra<Rationals>> {
        let v: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let r: Vec<String> = rels.iter().map(|s| s.to_string()).collect();
        Arc::new(build_presentation_strs(&v, &r, cap).unwrap())
    }

    #[test]
    fn residue_field_and_ideal() {
        let a = alg(&["x"], &["x^2"], 3);
        let k = GradedModule::residue_field(&a);
        assert_eq!(k.hilbert(), vec![1, 0]);
        assert_eq!(k.min_gens(), vec![(0, 1)]);
        let i = GradedModule::ideal(ideal_from_strs(&a, &["x"]).unwrap());
        assert_eq!(i.min_gens(), vec![(1, 1)]);
        let z = GradedModule::ideal(ideal_from_strs(&a, &["0"]).unwrap());
        assert!(z.is_zero());
        assert!(z.min_gens().is_empty());
    }

    #[test]
    fn subquotient_generators() {
        let a = alg(&["x", "y", "z", "u"], &["x^2", "x*y", "y^2", "z^2", "z*u", "u^2"], 4);
        let m = ideal_from_strs(&a, &["x", "y*u"]).unwrap();
        let n = ideal_from_strs(&a, &["x"]).unwrap();
        let q = GradedModule::quotient(&m, &n).unwrap();
        assert_eq!(q.min_gens(), vec![(2, 1)]);
        assert!(GradedModule::quotient(&n, &m).is_err());
    }
}
