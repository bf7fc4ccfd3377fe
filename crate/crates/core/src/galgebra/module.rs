//! Graded free modules `⊕ A(-g_j)`, their submodules, and ideals as
//! submodules of `A` itself.

use std::sync::Arc;

use super::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::exactla::{Echelon, Field, Mat, Subspace};

/// Free module with generators in the given degrees; basis of `F_t` is the
/// concatenation, over generators `j` with `g_j ≤ t`, of the basis of `A_{t-g_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    pub gen_degrees: Vec<usize>,
}

/// Position of one generator's block inside `F_t`.
#[derive(Clone, Copy, Debug)]
pub struct Block {
    pub generator: usize,
    pub degree: usize,
    pub offset: usize,
    pub len: usize,
}

impl FreeModule {
    pub fn new(gen_degrees: Vec<usize>) -> Self {
        FreeModule { gen_degrees }
    }

    /// `A` itself, generated in degree 0.
    pub fn ring() -> Self {
        FreeModule { gen_degrees: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.gen_degrees.len()
    }

    /// Last degree where `F_t` is stored. For an artinian algebra `F` vanishes above it;
    /// otherwise this is the last degree where every block is known.
    pub fn top<K: Field>(&self, a: &Algebra<K>) -> usize {
        if self.gen_degrees.is_empty() {
            return 0;
        }
        if a.is_artinian() {
            self.gen_degrees.iter().max().unwrap() + a.top()
        } else {
            self.gen_degrees.iter().min().unwrap() + a.top()
        }
    }

    /// Whether everything above `top` is zero.
    pub fn exact<K: Field>(&self, a: &Algebra<K>) -> bool {
        a.is_artinian() || self.gen_degrees.is_empty()
    }

    pub fn blocks<K: Field>(&self, a: &Algebra<K>, t: usize) -> Vec<Block> {
        let mut out = Vec::new();
        let mut offset = 0;
        for (j, &g) in self.gen_degrees.iter().enumerate() {
            if t < g {
                continue;
            }
            let len = a.dim(t - g);
            if len > 0 {
                out.push(Block { generator: j, degree: t - g, offset, len });
                offset += len;
            }
        }
        out
    }

    pub fn dim<K: Field>(&self, a: &Algebra<K>, t: usize) -> usize {
        self.blocks(a, t).iter().map(|b| b.len).sum()
    }

    /// `x_i · v` for `v` in `F_t`.
    pub fn mul_var<K: Field>(&self, a: &Algebra<K>, i: usize, t: usize, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = a.field();
        let src = self.blocks(a, t);
        let dst = self.blocks(a, t + 1);
        let mut out = vec![k.zero(); dst.iter().map(|b| b.len).sum()];
        let mut si = 0;
        for b in &dst {
            while si < src.len() && src[si].generator < b.generator {
                si += 1;
            }
            if si < src.len() && src[si].generator == b.generator {
                let s = src[si];
                let w = a.mul_var_vec(i, s.degree, &v[s.offset..s.offset + s.len]);
                out[b.offset..b.offset + b.len].clone_from_slice(&w);
            }
            // a block starting in degree t+1 is a fresh copy of A_0; x_i · (nothing) = 0
        }
        out
    }

    /// The basis vector `e_j` as an element of `F_{g_j}`.
    pub fn generator<K: Field>(&self, a: &Algebra<K>, j: usize) -> Element<K::Elem> {
        let t = self.gen_degrees[j];
        let k = a.field();
        let blocks = self.blocks(a, t);
        let mut coords = vec![k.zero(); blocks.iter().map(|b| b.len).sum()];
        let b = blocks.iter().find(|b| b.generator == j).expect("generator block");
        coords[b.offset] = k.one();
        Element { degree: t, coords }
    }

    /// `Σ_j c_j e_j` for algebra elements `c_j` with `deg c_j + g_j = t`.
    pub fn vector<K: Field>(&self, a: &Algebra<K>, t: usize, comps: &[Element<K::Elem>]) -> Result<Element<K::Elem>> {
        if comps.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: comps.len() });
        }
        let k = a.field();
        let blocks = self.blocks(a, t);
        let mut coords = vec![k.zero(); blocks.iter().map(|b| b.len).sum()];
        for (j, c) in comps.iter().enumerate() {
            if a.is_zero(c) {
                continue;
            }
            if c.degree + self.gen_degrees[j] != t {
                return Err(Error::NotHomogeneous(format!(
                    "component {j} has degree {} but must have degree {}",
                    c.degree,
                    t as i64 - self.gen_degrees[j] as i64
                )));
            }
            if let Some(b) = blocks.iter().find(|b| b.generator == j) {
                coords[b.offset..b.offset + b.len].clone_from_slice(&c.coords);
            }
        }
        Ok(Element { degree: t, coords })
    }

    /// Component `j` of `v`, as an element of `A_{t - g_j}`.
    pub fn component<K: Field>(&self, a: &Algebra<K>, v: &Element<K::Elem>, j: usize) -> Option<Element<K::Elem>> {
        let b = self.blocks(a, v.degree).into_iter().find(|b| b.generator == j)?;
        Some(Element { degree: b.degree, coords: v.coords[b.offset..b.offset + b.len].to_vec() })
    }

    /// `b · v` for every basis element `b` of `A_e`, `e ≤ max_e`.
    pub fn orbit<K: Field>(&self, a: &Algebra<K>, v: &Element<K::Elem>, max_e: usize) -> Vec<Vec<Vec<K::Elem>>> {
        let s = v.degree;
        let top = self.top(a);
        let cap = if s > top { 0 } else { max_e.min(top - s) };
        a.orbit(v.coords.clone(), cap, |i, e, w| self.mul_var(a, i, s + e, w))
    }
}

/// A graded submodule `N ⊆ F`, stored as one subspace per degree `0..=top`.
#[derive(Clone)]
pub struct Submodule<K: Field> {
    alg: Arc<Algebra<K>>,
    free: FreeModule,
    pieces: Vec<Subspace<K>>,
    exact: bool,
}

/// Ideals are submodules of `A = A(0)`.
pub type GradedIdeal<K> = Submodule<K>;

impl<K: Field> std::fmt::Debug for Submodule<K> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule of rank-{} free module, dims {:?}", self.free.rank(), self.dims())
    }
}

impl<K: Field> Submodule<K> {
    pub fn from_pieces(alg: Arc<Algebra<K>>, free: FreeModule, pieces: Vec<Subspace<K>>, exact: bool) -> Result<Self> {
        for (t, p) in pieces.iter().enumerate() {
            let n = free.dim(&alg, t);
            if p.ambient() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.ambient() });
            }
        }
        Ok(Submodule { alg, free, pieces, exact })
    }

    pub fn zero(alg: &Arc<Algebra<K>>, free: FreeModule) -> Self {
        let k = alg.field();
        let top = free.top(alg);
        let pieces = (0..=top).map(|t| Subspace::zero(k, free.dim(alg, t))).collect();
        let exact = free.exact(alg);
        Submodule { alg: alg.clone(), free, pieces, exact }
    }

    pub fn full(alg: &Arc<Algebra<K>>, free: FreeModule) -> Self {
        let k = alg.field();
        let top = free.top(alg);
        let pieces = (0..=top).map(|t| Subspace::full(k, free.dim(alg, t))).collect();
        let exact = free.exact(alg);
        Submodule { alg: alg.clone(), free, pieces, exact }
    }

    /// Smallest submodule containing `gens`, closed under multiplication through `top`.
    pub fn generated_by(alg: &Arc<Algebra<K>>, free: FreeModule, gens: &[Element<K::Elem>]) -> Result<Self> {
        let k = alg.field();
        let top = free.top(alg);
        let exact = free.exact(alg);
        let mut spans: Vec<Vec<Vec<K::Elem>>> = vec![Vec::new(); top + 1];
        for g in gens {
            if g.degree > top {
                if exact {
                    continue;
                }
                return Err(Error::Truncation(format!(
                    "generator of degree {} lies above the known range (through {top})",
                    g.degree
                )));
            }
            let n = free.dim(alg, g.degree);
            if g.coords.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: g.coords.len() });
            }
            if g.coords.iter().all(|x| k.is_zero(x)) {
                continue;
            }
            for (e, level) in free.orbit(alg, g, top - g.degree).into_iter().enumerate() {
                spans[g.degree + e].extend(level);
            }
        }
        let pieces = spans
            .into_iter()
            .enumerate()
            .map(|(t, vecs)| Subspace::from_spanning(k, free.dim(alg, t), vecs))
            .collect();
        Ok(Submodule { alg: alg.clone(), free, pieces, exact })
    }

    pub fn algebra(&self) -> &Arc<Algebra<K>> {
        &self.alg
    }
    pub fn free(&self) -> &FreeModule {
        &self.free
    }
    /// Last degree with stored data.
    pub fn top(&self) -> usize {
        self.pieces.len() - 1
    }
    /// True when the submodule is known to vanish above `top`.
    pub fn is_exact(&self) -> bool {
        self.exact
    }
    pub fn known(&self, t: usize) -> bool {
        self.exact || t <= self.top()
    }
    pub fn piece(&self, t: usize) -> Option<&Subspace<K>> {
        self.pieces.get(t)
    }
    pub fn dim_at(&self, t: usize) -> usize {
        match self.pieces.get(t) {
            Some(p) => p.dim(),
            None => {
                assert!(self.exact, "degree {t} beyond known range");
                0
            }
        }
    }
    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.dim()).collect()
    }
    /// `dim F_t - dim N_t`, the Hilbert function of `F/N`.
    pub fn quotient_dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.ambient() - p.dim()).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(|p| p.is_zero())
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.alg, &other.alg) || self.free != other.free {
            return Err(Error::OwnerMismatch);
        }
        Ok(())
    }

    fn combine(&self, other: &Self, op: impl Fn(&Subspace<K>, &Subspace<K>) -> Result<Subspace<K>>) -> Result<Self> {
        self.check_owner(other)?;
        let top = self.top().min(other.top());
        let pieces = (0..=top).map(|t| op(&self.pieces[t], &other.pieces[t])).collect::<Result<Vec<_>>>()?;
        let exact = self.exact && other.exact && self.top() == other.top();
        Ok(Submodule { alg: self.alg.clone(), free: self.free.clone(), pieces, exact })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.sum(b))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.combine(other, |a, b| a.intersect(b))
    }

    /// Degreewise equality over the common known range.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_owner(other)?;
        let top = self.top().min(other.top());
        Ok((0..=top).all(|t| self.pieces[t] == other.pieces[t]))
    }

    pub fn contains_submodule(&self, other: &Self) -> Result<bool> {
        self.check_owner(other)?;
        let top = self.top().min(other.top());
        Ok((0..=top).all(|t| self.pieces[t].contains_subspace(&other.pieces[t])))
    }

    pub fn contains(&self, v: &Element<K::Elem>) -> Result<bool> {
        match self.pieces.get(v.degree) {
            Some(p) => Ok(p.contains(&v.coords)),
            None if self.exact => Ok(v.coords.is_empty()),
            None => Err(Error::DegreeOverflow { degree: v.degree, truncation: self.top() }),
        }
    }

    /// Restriction to degrees `≤ top`.
    pub fn truncate(&self, top: usize) -> Self {
        let top = top.min(self.top());
        Submodule {
            alg: self.alg.clone(),
            free: self.free.clone(),
            pieces: self.pieces[..=top].to_vec(),
            exact: self.exact && top == self.top(),
        }
    }

    /// `A_1 · N_{t-1}` inside `F_t`.
    pub fn linear_multiples(&self, t: usize) -> Subspace<K> {
        self.linear_multiples_upto(t, usize::MAX)
    }

    /// `A_1 · N_{t-1}`, or a subspace of it of dimension `stop` once that is reached.
    /// Products are reduced one at a time so memory stays at one basis.
    fn linear_multiples_upto(&self, t: usize, stop: usize) -> Subspace<K> {
        let k = self.alg.field();
        let n = self.free.dim(&self.alg, t);
        let mut ech = Echelon::new(k, n);
        if t == 0 {
            return ech.into_subspace();
        }
        'outer: for b in self.pieces[t - 1].basis() {
            for i in 0..self.alg.num_vars() {
                ech.insert(self.free.mul_var(&self.alg, i, t - 1, b));
                if ech.rank() >= stop.min(n) {
                    break 'outer;
                }
            }
        }
        ech.into_subspace()
    }

    /// Whether `A_1 · N_t ⊆ N_{t+1}` throughout the stored range.
    pub fn is_closed(&self) -> bool {
        (1..=self.top()).all(|t| self.pieces[t].contains_subspace(&self.linear_multiples(t)))
    }

    /// Minimal generators as homogeneous vectors, lowest degree first.
    pub fn min_gen_elements(&self) -> Vec<Element<K::Elem>> {
        let mut out = Vec::new();
        for t in 0..=self.top() {
            if self.pieces[t].is_zero() {
                continue;
            }
            let lower = self.linear_multiples_upto(t, self.pieces[t].dim());
            for v in self.pieces[t].complement_of(&lower) {
                out.push(Element { degree: t, coords: v });
            }
        }
        out
    }

    /// `(degree, count)` of minimal generators.
    pub fn min_gens(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for t in 0..=self.top() {
            let c = self.pieces[t].dim() - self.linear_multiples_upto(t, self.pieces[t].dim()).dim();
            if c > 0 {
                out.push((t, c));
            }
        }
        out
    }

    pub fn min_gen_degree(&self) -> Option<usize> {
        self.min_gens().first().map(|(d, _)| *d)
    }

    /// True iff every minimal generator has degree `d`.
    pub fn generated_in_degree(&self, d: usize) -> bool {
        self.min_gens().iter().all(|(t, _)| *t == d)
    }

    /// Matrix of `A_d → F_{d+s}/N_{d+s}`, `a ↦ a·f`, for `f ∈ F_s`.
    fn colon_matrix(&self, f: &Element<K::Elem>, orbit: &[Vec<Vec<K::Elem>>], d: usize) -> Mat<K> {
        let k = self.alg.field();
        let t = f.degree + d;
        let target = &self.pieces[t];
        let rows = target.ambient() - target.dim();
        let cols = self.alg.dim(d);
        let mut m = Mat::zeros(k, rows, cols);
        for (j, v) in orbit[d].iter().enumerate() {
            for (r, x) in target.quotient_coords(v).into_iter().enumerate() {
                if !k.is_zero(&x) {
                    m.set(r, j, x);
                }
            }
        }
        m
    }

    /// `(N : f) = {a ∈ A : a·f ∈ N}` for homogeneous `f ∈ F`.
    pub fn colon(&self, f: &Element<K::Elem>) -> Result<GradedIdeal<K>> {
        let k = self.alg.field();
        let s = f.degree;
        let ring = FreeModule::ring();
        let a = &self.alg;
        if !self.known(s) {
            return Err(Error::DegreeOverflow { degree: s, truncation: self.top() });
        }
        let expected = self.free.dim(a, s);
        if s <= self.top() && f.coords.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: f.coords.len() });
        }
        let (res_top, exact) = if self.exact && a.is_artinian() {
            (a.top(), true)
        } else {
            let room = self.top().checked_sub(s).unwrap_or(0);
            (room.min(a.top()), false)
        };
        let orbit = if s <= self.top() { self.free.orbit(a, f, res_top) } else { Vec::new() };
        let mut pieces = Vec::with_capacity(res_top + 1);
        for d in 0..=res_top {
            let t = s + d;
            if t > self.top() || d >= orbit.len() {
                // F_t = 0 here, so every a works
                pieces.push(Subspace::full(k, a.dim(d)));
                continue;
            }
            pieces.push(self.colon_matrix(f, &orbit, d).kernel());
        }
        Ok(Submodule { alg: a.clone(), free: ring, pieces, exact })
    }

    /// `(0 : f)` inside the ambient free module of `self`.
    pub fn annihilator_in(&self, f: &Element<K::Elem>) -> Result<GradedIdeal<K>> {
        Submodule::zero(&self.alg, self.free.clone()).colon(f)
    }

    pub fn format_generators(&self) -> Vec<String> {
        self.min_gen_elements().iter().map(|e| format_vector(&self.alg, &self.free, e)).collect()
    }
}

/// Ideal generated by algebra elements.
pub fn ideal<K: Field>(alg: &Arc<Algebra<K>>, gens: &[Element<K::Elem>]) -> Result<GradedIdeal<K>> {
    Submodule::generated_by(alg, FreeModule::ring(), gens)
}

/// Ideal generated by parsed expressions.
pub fn ideal_from_strs<K: Field>(alg: &Arc<Algebra<K>>, gens: &[&str]) -> Result<GradedIdeal<K>> {
    let elems = gens.iter().map(|s| alg.parse(s)).collect::<Result<Vec<_>>>()?;
    ideal(alg, &elems)
}

/// The irrelevant ideal `A_+`.
pub fn maximal_ideal<K: Field>(alg: &Arc<Algebra<K>>) -> GradedIdeal<K> {
    let vars: Vec<_> = (0..alg.num_vars()).map(|i| alg.var(i)).collect();
    ideal(alg, &vars).expect("variables are homogeneous")
}

/// Readable form of a vector in a free module, `c_1*e1 + ...`.
pub fn format_vector<K: Field>(alg: &Algebra<K>, free: &FreeModule, v: &Element<K::Elem>) -> String {
    if free.rank() == 1 && free.gen_degrees[0] == 0 {
        return alg.format(&Element { degree: v.degree, coords: v.coords.clone() });
    }
    let mut parts = Vec::new();
    for j in 0..free.rank() {
        if let Some(c) = free.component(alg, v, j) {
            if !alg.is_zero(&c) {
                parts.push(format!("({})*e{}", alg.format(&c), j + 1));
            }
        }
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// A degree-preserving map `F → G` of free modules, given by the images of the generators of `F`.
#[derive(Clone, Debug)]
pub struct FreeMap<E> {
    pub source: FreeModule,
    pub target: FreeModule,
    /// `columns[j] ∈ G_{g_j}`.
    pub columns: Vec<Element<E>>,
}

impl<E: Clone + PartialEq> FreeMap<E> {
    /// Builds a map from a `q × p` matrix of algebra elements (`entries[r][c]`), sending
    /// `e_c` of `F = ⊕ A(-src_deg[c])` to column `c`. Entry degrees must be consistent.
    pub fn from_matrix<K: Field<Elem = E>>(
        alg: &Algebra<K>,
        target: FreeModule,
        source_degrees: Vec<usize>,
        entries: &[Vec<Element<E>>],
    ) -> Result<Self> {
        let q = target.rank();
        if entries.len() != q {
            return Err(Error::DimensionMismatch { expected: q, found: entries.len() });
        }
        let p = source_degrees.len();
        let mut columns = Vec::with_capacity(p);
        for (c, &deg) in source_degrees.iter().enumerate() {
            let comps: Vec<Element<E>> = (0..q)
                .map(|r| {
                    let e = entries[r].get(c).cloned().ok_or(Error::DimensionMismatch {
                        expected: p,
                        found: entries[r].len(),
                    })?;
                    if alg.is_zero(&e) && deg >= target.gen_degrees[r] {
                        return Ok(alg.zero(deg - target.gen_degrees[r]));
                    }
                    Ok(e)
                })
                .collect::<Result<_>>()?;
            columns.push(target.vector(alg, deg, &comps)?);
        }
        Ok(FreeMap { source: FreeModule::new(source_degrees), target, columns })
    }

    /// Matrix of the map `F_t → G_t` in the standard block bases.
    pub fn matrix_at<K: Field<Elem = E>>(&self, alg: &Algebra<K>, t: usize) -> Mat<K> {
        let k = alg.field();
        let rows = self.target.dim(alg, t);
        let blocks = self.source.blocks(alg, t);
        let cols: usize = blocks.iter().map(|b| b.len).sum();
        let mut m = Mat::zeros(k, rows, cols);
        for b in blocks {
            let orb = self.target.orbit(alg, &self.columns[b.generator], b.degree);
            let Some(level) = orb.get(b.degree) else { continue };
            for (kk, v) in level.iter().enumerate() {
                for (r, x) in v.iter().enumerate() {
                    if !k.is_zero(x) {
                        m.set(r, b.offset + kk, x.clone());
                    }
                }
            }
        }
        m
    }

    /// Image of one vector of `F_t`.
    pub fn apply<K: Field<Elem = E>>(&self, alg: &Algebra<K>, v: &Element<E>) -> Element<E> {
        let m = self.matrix_at(alg, v.degree);
        Element { degree: v.degree, coords: m.mul_vec(&v.coords) }
    }

    pub fn image<K: Field<Elem = E>>(&self, alg: &Arc<Algebra<K>>) -> Result<Submodule<K>> {
        Submodule::generated_by(alg, self.target.clone(), &self.columns)
    }

    /// Kernel, degree by degree through the range where both sides are known.
    pub fn kernel<K: Field<Elem = E>>(&self, alg: &Arc<Algebra<K>>) -> Result<Submodule<K>> {
        let exact = self.source.exact(alg) && self.target.exact(alg);
        let top = if exact {
            self.source.top(alg)
        } else if self.source.rank() == 0 {
            0
        } else {
            self.source.top(alg).min(if self.target.rank() == 0 { usize::MAX } else { self.target.top(alg) })
        };
        let pieces = (0..=top).map(|t| self.matrix_at(alg, t).kernel()).collect();
        Submodule::from_pieces(alg.clone(), self.source.clone(), pieces, exact)
    }

    /// The same matrix between `F(-s)` and `G(-s)`.
    pub fn shifted(&self, s: usize) -> Self {
        let shift = |f: &FreeModule| FreeModule::new(f.gen_degrees.iter().map(|g| g + s).collect());
        FreeMap {
            source: shift(&self.source),
            target: shift(&self.target),
            columns: self.columns.iter().map(|c| Element { degree: c.degree + s, coords: c.coords.clone() }).collect(),
        }
    }

    /// `self ∘ other` is zero on generators (hence everywhere).
    pub fn composes_to_zero<K: Field<Elem = E>>(&self, alg: &Algebra<K>, other: &FreeMap<E>) -> Result<bool> {
        if other.target != self.source {
            return Err(Error::OwnerMismatch);
        }
        let k = alg.field();
        for c in &other.columns {
            if c.degree > self.source.top(alg) && !self.source.exact(alg) {
                return Err(Error::DegreeOverflow { degree: c.degree, truncation: self.source.top(alg) });
            }
            let img = self.apply(alg, c);
            if img.coords.iter().any(|x| !k.is_zero(x)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Rationals;
    use crate::galgebra::poly::PolyRing;
    use crate::galgebra::presentation::build_from_presentation;

    fn build(vars: &[&str], rels: &[&str], cap: usize) -> Arc<Algebra<Rationals>> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let ring = PolyRing { names: &names };
        let rels: Vec<_> = rels.iter().map(|r| ring.parse(r).unwrap()).collect();
        Arc::new(build_from_presentation(&names, &rels, cap).unwrap())
    }

    fn roos() -> Arc<Algebra<Rationals>> {
        build(&["x", "y", "z", "u"], &["x^2", "x*y", "y^2", "z^2", "z*u", "u^2"], 4)
    }

    #[test]
    fn dual_numbers_colon() {
        let a = build(&["x"], &["x^2"], 3);
        let zero = Submodule::zero(&a, FreeModule::ring());
        let c = zero.colon(&a.parse("x").unwrap()).unwrap();
        assert!(c.equals(&ideal_from_strs(&a, &["x"]).unwrap()).unwrap());
    }

    #[test]
    fn roos_witness_colons() {
        let a = roos();
        let zero = Submodule::zero(&a, FreeModule::ring());
        let c1 = zero.colon(&a.parse("x-z").unwrap()).unwrap();
        let expect = ideal_from_strs(&a, &["y*u", "x+z"]).unwrap();
        assert!(c1.equals(&expect).unwrap());
        assert_eq!(c1.min_gens(), vec![(1, 1), (2, 1)]);
        let k = ideal_from_strs(&a, &["y*u"]).unwrap();
        let l1 = ideal_from_strs(&a, &["x-z"]).unwrap();
        assert!(k.intersect(&l1).unwrap().is_zero());
    }

    #[test]
    fn maximal_ideal_and_quotient_dims() {
        let a = roos();
        let m = maximal_ideal(&a);
        assert_eq!(m.min_gens(), vec![(1, 4)]);
        assert_eq!(m.quotient_dims(), vec![1, 0, 0]);
        assert!(m.is_closed());
        let z = Submodule::zero(&a, FreeModule::ring());
        assert!(z.min_gens().is_empty());
    }

    #[test]
    fn owner_mismatch_detected() {
        let a = roos();
        let b = roos();
        let i = maximal_ideal(&a);
        let j = maximal_ideal(&b);
        assert!(matches!(i.sum(&j), Err(Error::OwnerMismatch)));
    }

    #[test]
    fn conca_matrix_kernel() {
        let a = build(&["x", "y", "z", "u"], &["x^2+y*z", "x*y-y*u", "x*z", "x*u", "y^2"], 6);
        let e = |s: &str| a.parse(s).unwrap();
        let phi = FreeMap::from_matrix(
            &a,
            FreeModule::new(vec![0, 0]),
            vec![1, 1],
            &[vec![e("-x"), e("y")], vec![e("z"), e("x")]],
        )
        .unwrap();
        assert!(phi.composes_to_zero(&a, &phi.shifted(1)).unwrap());
        let ker = phi.kernel(&a).unwrap();
        // Ker φ is generated by the two columns shifted by one and u^2 e2
        assert_eq!(ker.min_gens(), vec![(2, 2), (3, 1)]);
        let im = phi.image(&a).unwrap();
        assert_eq!(im.min_gens(), vec![(1, 2)]);
    }
}
