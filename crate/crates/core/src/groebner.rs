//! Buchberger's algorithm and the ideal-theoretic queries built on it:
//! membership, intersection, radical membership, dimension and degree.
//!
//! The engine uses the Gebauer–Möller installation of both Buchberger
//! criteria and selects pairs by sugar degree (the normal strategy for
//! homogeneous input). Reduction accumulates into a hash map indexed by a
//! max-heap of monomial keys, so each reduction step costs
//! `O(|reducer| log n)`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::{Arc, OnceLock};

use rustc_hash::FxHashMap;

use crate::coeff::Field;
use crate::monomial_ideal;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing, Term};

/// An ideal given by generators. Generators are nonzero, monic and
/// deduplicated; the Gröbner basis is computed once on demand.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: Arc<PolyRing<F>>,
    gens: Vec<Poly<F>>,
    gb: OnceLock<GroebnerBasis<F>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.normalized().to_string()).collect();
        write!(f, "Ideal({})", gens.join(", "))
    }
}

/// A reduced Gröbner basis with respect to the order of its ring: monic
/// elements sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: Arc<PolyRing<F>>,
    elems: Vec<Poly<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Poly<F>>) -> Self {
        let mut out: Vec<Poly<F>> = Vec::new();
        for g in gens {
            assert!(g.same_ring(&Poly::zero(ring)), "generator from a different ring");
            if g.is_zero() {
                continue;
            }
            let g = g.monic();
            if !out.contains(&g) {
                out.push(g);
            }
        }
        Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &Arc<PolyRing<F>>) -> Self {
        Self::new(ring, vec![Poly::one(ring)])
    }

    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.gens
    }

    /// Generators in display-normal form (see [`Poly::normalized`]).
    pub fn normalized_generators(&self) -> Vec<Poly<F>> {
        self.gens.iter().map(|g| g.normalized()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        self.gb.get_or_init(|| buchberger(self))
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis().is_unit()
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.groebner_basis().normal_form(f).is_zero()
    }

    /// `other ⊆ self`, tested on the generators of `other`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Ideal equality as two-way generator membership.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a * b);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1-t)·J`.
    pub fn intersection(&self, other: &Ideal<F>) -> Ideal<F> {
        ideal_intersection(self, other)
    }

    /// `f ∈ √I` via the Rabinowitsch trick: `1 ∈ I + (1 - t f)`.
    pub fn radical_contains(&self, f: &Poly<F>) -> bool {
        radical_membership(f, self)
    }

    pub fn dimension_and_degree(&self) -> DimensionDegree {
        self.groebner_basis().dimension_and_degree()
    }
}

/// Krull dimension of `R/I` and degree (leading coefficient of the Hilbert
/// polynomial, times `(dim-1)!`). The unit ideal has `dim = -1`, degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionDegree {
    pub dim: i32,
    pub codim: i32,
    pub degree: i64,
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn elements(&self) -> &[Poly<F>] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.elems.len() == 1 && self.elems[0].is_constant()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems.iter().map(|g| *g.leading_monomial().unwrap()).collect()
    }

    /// The unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        assert!(f.same_ring(&Poly::zero(&self.ring)), "ring mismatch");
        let reducers = Reducers::new(self.elems.iter().map(|g| g.terms()).collect());
        let terms = reduce_full(&self.ring, f.terms().to_vec(), &reducers);
        Poly::from_sorted_terms(&self.ring, terms)
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Monomials of degree `d` outside the leading-term ideal, descending in
    /// the ring order.
    pub fn standard_monomials(&self, d: u32) -> Vec<Monomial> {
        let lms = self.leading_monomials();
        self.ring
            .monomials_of_degree(d)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect()
    }

    pub fn hilbert_numerator(&self) -> Vec<i64> {
        monomial_ideal::hilbert_numerator(&self.leading_monomials())
    }

    pub fn dimension_and_degree(&self) -> DimensionDegree {
        let n = self.ring.arity();
        let lms = self.leading_monomials();
        let dim = monomial_ideal::krull_dimension(n, &lms);
        if dim < 0 {
            return DimensionDegree {
                dim: -1,
                codim: n as i32 + 1,
                degree: 0,
            };
        }
        let num = monomial_ideal::hilbert_numerator(&lms);
        let (pole_dim, degree) = monomial_ideal::dimension_and_degree_from_numerator(n, &num);
        debug_assert_eq!(pole_dim, dim);
        DimensionDegree {
            dim,
            codim: n as i32 - dim,
            degree,
        }
    }
}

/// Reduced Gröbner basis of `ideal` with respect to the order of its ring.
pub fn buchberger<F: Field>(ideal: &Ideal<F>) -> GroebnerBasis<F> {
    let ring = ideal.ring();
    let elems = Engine::new(ring).run(ideal.generators());
    GroebnerBasis {
        ring: ring.clone(),
        elems,
    }
}

/// Reduced Gröbner basis with respect to `order`, computed in a copy of the
/// ideal's ring that carries that order.
pub fn buchberger_with_order<F: Field>(ideal: &Ideal<F>, order: MonomialOrder) -> GroebnerBasis<F> {
    let ring = ideal.ring();
    if ring.order() == order {
        return ideal.groebner_basis().clone();
    }
    let target = PolyRing::new(ring.field().clone(), ring.var_names(), order).unwrap();
    let ident: Vec<usize> = (0..ring.arity()).collect();
    let gens = ideal.generators().iter().map(|g| g.map_vars(&target, &ident)).collect();
    buchberger(&Ideal::new(&target, gens))
}

pub fn normal_form<F: Field>(f: &Poly<F>, gb: &GroebnerBasis<F>) -> Poly<F> {
    gb.normal_form(f)
}

pub fn ideal_membership<F: Field>(f: &Poly<F>, ideal: &Ideal<F>) -> bool {
    ideal.contains(f)
}

pub fn ideal_intersection<F: Field>(a: &Ideal<F>, b: &Ideal<F>) -> Ideal<F> {
    let ring = a.ring();
    assert!(Poly::zero(ring).same_ring(&Poly::zero(b.ring())), "ring mismatch");
    if a.generators().is_empty() || b.generators().is_empty() {
        return Ideal::zero(ring);
    }
    let mut names = vec!["_t".to_string()];
    names.extend(ring.var_names().iter().cloned());
    let ext = PolyRing::new(ring.field().clone(), &names, MonomialOrder::Elimination(1)).unwrap();
    let shift: Vec<usize> = (1..=ring.arity()).collect();
    let t = Poly::var(&ext, 0);
    let one_minus_t = &Poly::one(&ext) - &t;
    let mut gens = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.map_vars(&ext, &shift));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.map_vars(&ext, &shift));
    }
    let gb = buchberger(&Ideal::new(&ext, gens));
    let back: Vec<usize> = std::iter::once(0).chain(0..ring.arity()).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponent(0) == 0))
        .map(|g| g.map_vars(ring, &back))
        .collect();
    Ideal::new(ring, kept)
}

pub fn radical_membership<F: Field>(f: &Poly<F>, ideal: &Ideal<F>) -> bool {
    let ring = ideal.ring();
    if f.is_zero() {
        return true;
    }
    let mut names: Vec<String> = ring.var_names().to_vec();
    names.push("_t".to_string());
    let ext = PolyRing::new(ring.field().clone(), &names, ring.order()).unwrap();
    let ident: Vec<usize> = (0..ring.arity()).collect();
    let t = Poly::var(&ext, ring.arity());
    let mut gens: Vec<Poly<F>> = ideal.generators().iter().map(|g| g.map_vars(&ext, &ident)).collect();
    gens.push(&Poly::one(&ext) - &(&t * &f.map_vars(&ext, &ident)));
    buchberger(&Ideal::new(&ext, gens)).is_unit()
}

// ---------------------------------------------------------------------------
// engine internals

/// Lookup table of leading monomials for reduction.
struct Reducers<'a, F: Field> {
    polys: Vec<&'a [Term<F>]>,
    lms: Vec<Monomial>,
}

impl<'a, F: Field> Reducers<'a, F> {
    fn new(polys: Vec<&'a [Term<F>]>) -> Self {
        let lms = polys.iter().map(|p| p[0].0).collect();
        Reducers { polys, lms }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<usize> {
        let d = m.degree();
        self.lms
            .iter()
            .position(|l| l.degree() <= d && l.divides(m))
    }
}

/// Sparse accumulator: coefficients in a hash map, pending monomials in a
/// max-heap keyed by the monomial order.
struct Accumulator<F: Field> {
    order: MonomialOrder,
    map: FxHashMap<Monomial, F::Elem>,
    heap: BinaryHeap<(u128, Monomial)>,
}

impl<F: Field> Accumulator<F> {
    fn new(order: MonomialOrder) -> Self {
        Accumulator {
            order,
            map: FxHashMap::default(),
            heap: BinaryHeap::new(),
        }
    }

    /// Adds `coeff * shift * terms`.
    fn add_scaled(&mut self, field: &F, terms: &[Term<F>], shift: &Monomial, coeff: &F::Elem) {
        for (m, c) in terms {
            let mm = m.mul(shift);
            let v = field.mul(c, coeff);
            match self.map.get_mut(&mm) {
                Some(x) => *x = field.add(x, &v),
                None => {
                    self.map.insert(mm, v);
                    self.heap.push((self.order.key(&mm), mm));
                }
            }
        }
    }

    fn pop(&mut self, field: &F) -> Option<Term<F>> {
        while let Some((_, m)) = self.heap.pop() {
            let c = self.map.remove(&m).expect("heap and map agree");
            if !field.is_zero(&c) {
                return Some((m, c));
            }
        }
        None
    }
}

/// Full reduction of `f` by monic reducers; returns the remainder terms in
/// descending order.
fn reduce_full<F: Field>(ring: &PolyRing<F>, f: Vec<Term<F>>, reducers: &Reducers<'_, F>) -> Vec<Term<F>> {
    let field = ring.field();
    let mut acc: Accumulator<F> = Accumulator::new(ring.order());
    acc.add_scaled(field, &f, &Monomial::ONE, &field.one());
    let mut rem = Vec::new();
    while let Some((m, c)) = acc.pop(field) {
        match reducers.find(&m) {
            Some(i) => {
                let g = reducers.polys[i];
                let q = g[0].0.quotient(&m);
                acc.add_scaled(field, &g[1..], &q, &field.neg(&c));
            }
            None => rem.push((m, c)),
        }
    }
    rem
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Pair {
    sugar: u32,
    lcm_key: u128,
    i: usize,
    j: usize,
}

struct Element<F: Field> {
    terms: Vec<Term<F>>,
    lm: Monomial,
    sugar: u32,
    active: bool,
}

struct Engine<'r, F: Field> {
    ring: &'r Arc<PolyRing<F>>,
    basis: Vec<Element<F>>,
    pairs: BinaryHeap<Reverse<Pair>>,
    unit: bool,
}

impl<'r, F: Field> Engine<'r, F> {
    fn new(ring: &'r Arc<PolyRing<F>>) -> Self {
        Engine {
            ring,
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            unit: false,
        }
    }

    fn field(&self) -> &F {
        self.ring.field()
    }

    fn active_reducers(&self) -> Reducers<'_, F> {
        Reducers::new(
            self.basis
                .iter()
                .filter(|e| e.active)
                .map(|e| e.terms.as_slice())
                .collect(),
        )
    }

    fn make_monic(&self, mut terms: Vec<Term<F>>) -> Vec<Term<F>> {
        let f = self.field();
        let inv = f.inv(&terms[0].1).expect("nonzero");
        if !f.is_one(&inv) {
            for t in terms.iter_mut() {
                t.1 = f.mul(&t.1, &inv);
            }
        }
        terms
    }

    fn run(mut self, gens: &[Poly<F>]) -> Vec<Poly<F>> {
        let order = self.ring.order();
        let mut input: Vec<&Poly<F>> = gens.iter().filter(|g| !g.is_zero()).collect();
        input.sort_by(|a, b| {
            order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
        });
        for g in input {
            let sugar = g.degree().unwrap();
            let reduced = {
                let reducers = self.active_reducers();
                reduce_full(self.ring, g.terms().to_vec(), &reducers)
            };
            if reduced.is_empty() {
                continue;
            }
            self.insert(reduced, sugar);
            if self.unit {
                return vec![Poly::one(self.ring)];
            }
        }

        while let Some(Reverse(pair)) = self.pairs.pop() {
            let spoly = self.s_polynomial(pair.i, pair.j);
            let reduced = {
                let reducers = self.active_reducers();
                reduce_full(self.ring, spoly, &reducers)
            };
            if reduced.is_empty() {
                continue;
            }
            self.insert(reduced, pair.sugar);
            if self.unit {
                return vec![Poly::one(self.ring)];
            }
        }
        self.finish()
    }

    fn s_polynomial(&self, i: usize, j: usize) -> Vec<Term<F>> {
        let f = self.field();
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let lcm = a.lm.lcm(&b.lm);
        let mut acc: Accumulator<F> = Accumulator::new(self.ring.order());
        acc.add_scaled(f, &a.terms[1..], &a.lm.quotient(&lcm), &f.one());
        acc.add_scaled(f, &b.terms[1..], &b.lm.quotient(&lcm), &f.neg(&f.one()));
        let mut out = Vec::new();
        while let Some(t) = acc.pop(f) {
            out.push(t);
        }
        out
    }

    /// Adds a new (reduced, nonzero) element and updates the pair set with
    /// the Gebauer–Möller criteria.
    fn insert(&mut self, terms: Vec<Term<F>>, sugar: u32) {
        let terms = self.make_monic(terms);
        let lm = terms[0].0;
        let sugar = terms.iter().map(|t| t.0.degree()).max().unwrap().max(sugar);
        if lm.degree() == 0 {
            self.unit = true;
            return;
        }
        let order = self.ring.order();
        let h = self.basis.len();

        // candidate pairs (g, h)
        let mut cands: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, e)| e.active)
            .map(|(i, e)| (i, e.lm.lcm(&lm), e.lm.is_coprime(&lm)))
            .collect();
        // chain criterion inside the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        cands.sort_by_key(|c| (c.1.degree(), order.key(&c.1)));
        for (k, c) in cands.iter().enumerate() {
            let dominated = kept.iter().any(|d| d.1.divides(&c.1))
                || cands[k + 1..].iter().any(|d| d.1.divides(&c.1) && d.1 != c.1);
            if c.2 || !dominated {
                kept.push(*c);
            }
        }
        // drop old pairs whose lcm is strictly divisible through h
        let old: Vec<Reverse<Pair>> = std::mem::take(&mut self.pairs).into_vec();
        for Reverse(p) in old {
            let l = self.basis[p.i].lm.lcm(&self.basis[p.j].lm);
            let drop = lm.divides(&l)
                && self.basis[p.i].lm.lcm(&lm) != l
                && self.basis[p.j].lm.lcm(&lm) != l;
            if !drop {
                self.pairs.push(Reverse(p));
            }
        }
        for (i, l, coprime) in kept {
            if coprime {
                continue;
            }
            let e = &self.basis[i];
            let s = (e.sugar - e.lm.degree() + l.degree()).max(sugar - lm.degree() + l.degree());
            self.pairs.push(Reverse(Pair {
                sugar: s,
                lcm_key: order.key(&l),
                i,
                j: h,
            }));
        }
        for e in self.basis.iter_mut() {
            if e.active && lm.divides(&e.lm) {
                e.active = false;
            }
        }
        self.basis.push(Element {
            terms,
            lm,
            sugar,
            active: true,
        });
    }

    /// Interreduction into the reduced basis.
    fn finish(self) -> Vec<Poly<F>> {
        let order = self.ring.order();
        let mut minimal: Vec<&Element<F>> = self.basis.iter().filter(|e| e.active).collect();
        minimal.sort_by(|a, b| order.cmp(&a.lm, &b.lm));
        let mut out = Vec::with_capacity(minimal.len());
        for (k, e) in minimal.iter().enumerate() {
            let others = Reducers::new(
                minimal
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != k)
                    .map(|(_, o)| o.terms.as_slice())
                    .collect(),
            );
            let tail = reduce_full(self.ring, e.terms[1..].to_vec(), &others);
            let mut terms = Vec::with_capacity(tail.len() + 1);
            terms.push(e.terms[0].clone());
            terms.extend(tail);
            out.push(Poly::from_sorted_terms(self.ring, terms));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{PrimeField, Rationals};
    use crate::linalg::Matrix;
    use proptest::prelude::*;

    fn ring_x<F: Field>(f: F) -> Arc<PolyRing<F>> {
        PolyRing::new(f, &["x1", "x2", "x3"], MonomialOrder::Grevlex).unwrap()
    }

    fn ring_a<F: Field>(f: F) -> Arc<PolyRing<F>> {
        PolyRing::new(f, &["a1", "a2", "a3", "a4", "a5", "a6"], MonomialOrder::Grevlex).unwrap()
    }

    fn v<F: Field>(r: &Arc<PolyRing<F>>, i: usize) -> Poly<F> {
        Poly::var(r, i)
    }

    #[test]
    fn trivial_bases() {
        let r = ring_x(Rationals);
        let i = Ideal::new(&r, vec![v(&r, 0), v(&r, 1)]);
        let gb = i.groebner_basis();
        let s: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        assert_eq!(s, vec!["x2", "x1"]);
        assert!(Ideal::unit(&r).is_unit());
        assert_eq!(Ideal::unit(&r).groebner_basis().elements()[0].to_string(), "1");
    }

    #[test]
    fn normal_forms_and_membership() {
        let r = ring_x(Rationals);
        let x1 = v(&r, 0);
        let i = Ideal::new(&r, vec![x1.clone()]);
        assert!(i.groebner_basis().normal_form(&x1.pow(2)).is_zero());
        assert_eq!(i.groebner_basis().normal_form(&v(&r, 1)), v(&r, 1));
        assert!(i.contains(&x1.pow(3)));
        assert!(!i.contains(&v(&r, 1)));
    }

    /// Rows `m * g` for all generators `g` and monomials `m` with
    /// `deg(m g) = d`, as coefficient vectors over the degree-`d` monomials.
    fn macaulay_matrix<F: Field>(r: &Arc<PolyRing<F>>, gens: &[Poly<F>], d: u32) -> (Matrix<F>, Vec<Monomial>) {
        let cols = r.monomials_of_degree(d);
        let mut rows = Vec::new();
        for g in gens {
            let dg = g.degree().unwrap();
            if dg > d {
                continue;
            }
            for m in r.monomials_of_degree(d - dg) {
                let p = g.mul_term(&m, &r.field().one());
                rows.push(cols.iter().map(|c| p.coeff(c)).collect());
            }
        }
        if rows.is_empty() {
            return (Matrix::zeros(r.field(), 0, cols.len()), cols);
        }
        (Matrix::from_rows(r.field(), rows), cols)
    }

    #[test]
    fn groebner_basis_of_binomial_ideal_matches_macaulay_oracle() {
        let r = ring_x(Rationals);
        let (x1, x2, x3) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let f1 = &x1.pow(2) - &(&x2 * &x3);
        let f2 = &x2.pow(2) - &(&x1 * &x3);
        let ideal = Ideal::new(&r, vec![f1.clone(), f2.clone()]);
        let gb = ideal.groebner_basis();
        let lms = gb.leading_monomials();
        for d in 0..=6u32 {
            let (mac, cols) = macaulay_matrix(&r, &[f1.clone(), f2.clone()], d);
            // dim I_d from linear algebra equals the count of degree-d
            // monomials in the leading-term ideal
            let in_lt = cols.iter().filter(|m| lms.iter().any(|l| l.divides(m))).count();
            assert_eq!(mac.rank(), in_lt, "degree {d}");
            // every basis element of degree d lies in the row space
            for g in gb.elements().iter().filter(|g| g.degree() == Some(d)) {
                let row: Vec<_> = cols.iter().map(|c| g.coeff(c)).collect();
                let ext = mac.vstack(&Matrix::from_rows(r.field(), vec![row]));
                assert_eq!(ext.rank(), mac.rank());
            }
        }
        // idempotence
        let again = Ideal::new(&r, gb.elements().to_vec());
        assert_eq!(again.groebner_basis().elements(), gb.elements());
    }

    #[test]
    fn normal_form_matches_linear_algebra_oracle() {
        let r = ring_x(Rationals);
        let (x1, x2, x3) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let f1 = &x1.pow(2) - &(&x2 * &x3);
        let f2 = &x2.pow(2) - &(&x1 * &x3);
        let ideal = Ideal::new(&r, vec![f1.clone(), f2.clone()]);
        let f = (&x1 + &x2).pow(3);
        let nf = ideal.groebner_basis().normal_form(&f);
        // oracle: reduce f against the row-echelon form of I_3 whose pivots
        // are taken at the largest monomials; the residue at non-pivots is
        // the normal form
        let (mac, cols) = macaulay_matrix(&r, &[f1, f2], 3);
        let (red, pivots) = mac.rref();
        let field = r.field();
        let mut vec: Vec<_> = cols.iter().map(|c| f.coeff(c)).collect();
        for (row, &p) in pivots.iter().enumerate() {
            let c = vec[p].clone();
            for j in 0..cols.len() {
                vec[j] = field.sub(&vec[j], &field.mul(&c, red.get(row, j)));
            }
        }
        let oracle = Poly::from_terms(&r, cols.iter().cloned().zip(vec).collect());
        assert_eq!(nf, oracle);
        assert_eq!(nf.to_string(), "2*x1*x2*x3 + 3*x1*x3^2 + 3*x2*x3^2");
    }

    #[test]
    fn intersections() {
        let r = ring_a(PrimeField::default());
        let (a1, a2, a5, a6) = (v(&r, 0), v(&r, 1), v(&r, 4), v(&r, 5));
        let i = Ideal::new(&r, vec![a1.clone()]);
        let j = Ideal::new(&r, vec![a2.clone()]);
        let k = i.intersection(&j);
        assert!(k.equals(&Ideal::new(&r, vec![&a1 * &a2])));
        assert!(i.intersection(&i).equals(&i));

        let p = Ideal::new(&r, vec![a6.clone()]);
        let q = Ideal::new(&r, vec![a5.clone(), a6.pow(2)]);
        let pq = p.intersection(&q);
        assert!(pq.equals(&Ideal::new(&r, vec![&a5 * &a6, a6.pow(2)])));
        // independent check: products lie in the intersection, generators in both
        assert!(pq.contains_ideal(&p.product(&q)));
        assert!(p.contains_ideal(&pq) && q.contains_ideal(&pq));
    }

    #[test]
    fn radicals() {
        let r = ring_a(Rationals);
        let (a5, a6) = (v(&r, 4), v(&r, 5));
        let i = Ideal::new(&r, vec![a6.pow(3)]);
        assert!(i.radical_contains(&a6));
        assert!(!i.radical_contains(&a5));
    }

    #[test]
    fn dimension_examples() {
        let r = ring_a(Rationals);
        let i = Ideal::new(&r, vec![v(&r, 1), v(&r, 2), v(&r, 4)]);
        assert_eq!(i.dimension_and_degree(), DimensionDegree { dim: 3, codim: 3, degree: 1 });
        let j = Ideal::new(&r, vec![v(&r, 5).pow(2)]);
        assert_eq!(j.dimension_and_degree(), DimensionDegree { dim: 5, codim: 1, degree: 2 });
        assert_eq!(Ideal::unit(&r).dimension_and_degree().dim, -1);
    }

    #[test]
    fn inhomogeneous_unit_detection() {
        let r = ring_x(PrimeField::default());
        let (x1, x2) = (v(&r, 0), v(&r, 1));
        // x1 x2 - 1, x1 : unit ideal
        let i = Ideal::new(&r, vec![&(&x1 * &x2) - &Poly::one(&r), x1.clone()]);
        assert!(i.is_unit());
        let j = Ideal::new(&r, vec![&(&x1 * &x2) - &Poly::one(&r), &x1 - &x2]);
        assert!(!j.is_unit());
        assert_eq!(j.dimension_and_degree().dim, 1);
    }

    fn arb_small_ideal() -> impl Strategy<Value = (Vec<Vec<((u32, u32, u32), u32)>>, Vec<((u32, u32, u32), u32)>)> {
        let poly = prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), 1u32..101), 1..4);
        (prop::collection::vec(poly.clone(), 1..4), poly)
    }

    fn build(r: &Arc<PolyRing<PrimeField>>, ts: &[((u32, u32, u32), u32)]) -> Poly<PrimeField> {
        Poly::from_terms(
            r,
            ts.iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(&[*a, *b, *c]), *k))
                .collect(),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn ideal_closure_and_determinism((gens, g) in arb_small_ideal()) {
            let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x1", "x2", "x3"], MonomialOrder::Grevlex).unwrap();
            let gens: Vec<_> = gens.iter().map(|t| build(&r, t)).collect();
            let g = build(&r, &g);
            let ideal = Ideal::new(&r, gens.clone());
            let gb = ideal.groebner_basis();
            for f in &gens {
                prop_assert!(gb.normal_form(&(f * &g)).is_zero());
            }
            // determinism: permuted input gives the identical reduced basis
            let mut rev = gens.clone();
            rev.reverse();
            let gb2 = buchberger(&Ideal::new(&r, rev));
            prop_assert_eq!(gb.elements(), gb2.elements());
            // reducedness: no leading monomial divides a term of another element
            let lms = gb.leading_monomials();
            for (i, e) in gb.elements().iter().enumerate() {
                for (j, l) in lms.iter().enumerate() {
                    if i != j {
                        prop_assert!(e.terms().iter().all(|(m, _)| !l.divides(m)));
                    }
                }
            }
        }

        #[test]
        fn intersection_bounds((ga, gb) in (arb_small_ideal(), arb_small_ideal())) {
            let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x1", "x2", "x3"], MonomialOrder::Grevlex).unwrap();
            let i = Ideal::new(&r, ga.0.iter().map(|t| build(&r, t)).collect());
            let j = Ideal::new(&r, gb.0.iter().map(|t| build(&r, t)).collect());
            let k = i.intersection(&j);
            prop_assert!(i.contains_ideal(&k));
            prop_assert!(j.contains_ideal(&k));
            prop_assert!(k.contains_ideal(&i.product(&j)));
        }
    }
}
