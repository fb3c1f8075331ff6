//! Sparse multivariate polynomials over a [`Field`] with a fixed monomial
//! order.
//!
//! Monomials pack up to [`MAX_VARS`] exponents (each at most
//! [`MAX_EXPONENT`]) into a `u64`, one byte per variable with the first
//! variable in the most significant byte. Multiplication is a plain integer
//! addition and divisibility is a single SWAR test.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::coeff::Field;

pub const MAX_VARS: usize = 8;
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("too many variables ({0}, at most {MAX_VARS})")]
    TooManyVariables(usize),
}

/// An exponent vector of at most [`MAX_VARS`] entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial {
    packed: u64,
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { packed: 0, deg: 0 };

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        let mut packed = 0u64;
        let mut deg = 0;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} exceeds {MAX_EXPONENT}");
            packed |= (e as u64) << (56 - 8 * i);
            deg += e;
        }
        Monomial { packed, deg }
    }

    /// The monomial `x_i^e`.
    pub fn var_power(i: usize, e: u32) -> Self {
        assert!(i < MAX_VARS && e <= MAX_EXPONENT);
        Monomial {
            packed: (e as u64) << (56 - 8 * i),
            deg: e,
        }
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.packed >> (56 - 8 * i)) & 0xFF) as u32
    }

    pub fn exponents(&self, arity: usize) -> Vec<u32> {
        (0..arity).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn packed(&self) -> u64 {
        self.packed
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let packed = self.packed + other.packed;
        assert!(
            packed & HIGH_BITS == 0,
            "exponent overflow: exponents are limited to {MAX_EXPONENT}"
        );
        Monomial {
            packed,
            deg: self.deg + other.deg,
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        ((other.packed | HIGH_BITS) - self.packed) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`; caller guarantees divisibility.
    #[inline]
    pub fn quotient(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            packed: other.packed - self.packed,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut packed = 0u64;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).max(other.exponent(i));
            packed |= (e as u64) << (56 - 8 * i);
            deg += e;
        }
        Monomial { packed, deg }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut packed = 0u64;
        let mut deg = 0;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).min(other.exponent(i));
            packed |= (e as u64) << (56 - 8 * i);
            deg += e;
        }
        Monomial { packed, deg }
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        let nz = |x: u64| ((x & !HIGH_BITS) + !HIGH_BITS) & HIGH_BITS;
        nz(self.packed) & nz(other.packed) == 0
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> u32 {
        let mut mask = 0;
        for i in 0..MAX_VARS {
            if self.exponent(i) > 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Monomial orders with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    /// Degree in the first `k` variables decides first; ties are broken by
    /// grevlex on all variables. Any monomial involving the first block is
    /// larger than every monomial in the remaining variables of equal or
    /// lower total degree in the block.
    Elimination(usize),
}

impl MonomialOrder {
    /// An integer key whose natural order is the monomial order.
    #[inline]
    pub fn key(&self, m: &Monomial) -> u128 {
        match *self {
            MonomialOrder::Lex => m.packed as u128,
            MonomialOrder::Grevlex => grevlex_key(m),
            MonomialOrder::Elimination(k) => {
                let block = (0..k).map(|i| m.exponent(i)).sum::<u32>() as u128;
                (block << 96) | grevlex_key(m)
            }
        }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    /// Compares two exponent vectors.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering, PolyError> {
        if a.len() != b.len() {
            return Err(PolyError::ArityMismatch(a.len(), b.len()));
        }
        if a.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(a.len()));
        }
        Ok(self.cmp(&Monomial::from_exponents(a), &Monomial::from_exponents(b)))
    }
}

#[inline]
fn grevlex_key(m: &Monomial) -> u128 {
    ((m.deg as u128) << 64) | (!m.packed.swap_bytes()) as u128
}

/// All exponent vectors of total degree `d` in `arity` variables, sorted
/// descending in grevlex.
pub fn monomials_of_degree(arity: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; arity];
    fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == exps.len() {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
        exps[i] = 0;
    }
    if arity == 0 {
        if d == 0 {
            out.push(Monomial::ONE);
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    out
}

/// Variable names, coefficient field and monomial order.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl<F: Field> PolyRing<F> {
    pub fn new<S: AsRef<str>>(
        field: F,
        vars: &[S],
        order: MonomialOrder,
    ) -> Result<Arc<Self>, PolyError> {
        if vars.len() > MAX_VARS {
            return Err(PolyError::TooManyVariables(vars.len()));
        }
        Ok(Arc::new(PolyRing {
            field,
            vars: vars.iter().map(|s| s.as_ref().to_string()).collect(),
            order,
        }))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Monomials of degree `d`, descending in this ring's order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut ms = monomials_of_degree(self.arity(), d);
        let order = self.order;
        ms.sort_by(|a, b| order.cmp(b, a));
        ms
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.vars.iter().enumerate() {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

pub type Term<F> = (Monomial, <F as Field>::Elem);

/// A polynomial in canonical form: terms strictly descending in the ring's
/// order, no zero coefficients.
#[derive(Clone)]
pub struct Poly<F: Field> {
    ring: Arc<PolyRing<F>>,
    terms: Vec<Term<F>>,
}

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<F: Field> Poly<F> {
    pub fn zero(ring: &Arc<PolyRing<F>>) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing<F>>, c: F::Elem) -> Self {
        Self::term(ring, Monomial::ONE, c)
    }

    pub fn one(ring: &Arc<PolyRing<F>>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn term(ring: &Arc<PolyRing<F>>, m: Monomial, c: F::Elem) -> Self {
        let terms = if ring.field.is_zero(&c) {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn monomial(ring: &Arc<PolyRing<F>>, m: Monomial) -> Self {
        Self::term(ring, m, ring.field.one())
    }

    pub fn var(ring: &Arc<PolyRing<F>>, i: usize) -> Self {
        assert!(i < ring.arity(), "variable index out of range");
        Self::monomial(ring, Monomial::var_power(i, 1))
    }

    /// Builds a polynomial from arbitrary terms (any order, duplicates and
    /// zeros allowed).
    pub fn from_terms(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        let field = &ring.field;
        let order = ring.order;
        let mut terms = terms;
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
                _ => {
                    if let Some(last) = out.last() {
                        if field.is_zero(&last.1) {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some(last) = out.last() {
            if field.is_zero(&last.1) {
                out.pop();
            }
        }
        let p = Poly {
            ring: ring.clone(),
            terms: out,
        };
        p.debug_check();
        p
    }

    /// Wraps terms already in canonical form.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing<F>>, terms: Vec<Term<F>>) -> Self {
        let p = Poly {
            ring: ring.clone(),
            terms,
        };
        p.debug_check();
        p
    }

    #[inline]
    fn debug_check(&self) {
        #[cfg(debug_assertions)]
        {
            let order = self.ring.order;
            for w in self.terms.windows(2) {
                debug_assert!(order.cmp(&w[0].0, &w[1].0) == Ordering::Greater);
            }
            for (_, c) in &self.terms {
                debug_assert!(!self.ring.field.is_zero(c));
            }
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        &self.ring.field
    }

    pub fn terms(&self) -> &[Term<F>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<F>> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.deg == 0)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.deg).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.deg == m0.deg),
        }
    }

    pub fn same_ring(&self, other: &Poly<F>) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    /// Coefficient of `m` (zero when absent).
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        let order = self.ring.order;
        match self
            .terms
            .binary_search_by(|(t, _)| order.cmp(m, t))
        {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field.zero(),
        }
    }

    pub fn neg(&self) -> Self {
        let f = &self.ring.field;
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, f.mul(a, c))).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let f = &self.ring.field;
        if f.is_zero(c) {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        }
    }

    fn merge(&self, other: &Poly<F>, negate_other: bool) -> Self {
        let f = &self.ring.field;
        let order = self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let take_b = |c: &F::Elem| if negate_other { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0, take_b(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !f.is_zero(&c) {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (*m, take_b(c))));
        Poly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Poly<F>) -> Result<Self, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly<F>) -> Result<Self, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly<F>) -> Result<Self, PolyError> {
        if !self.same_ring(other) {
            return Err(PolyError::RingMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Poly<F>) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let f = &self.ring.field;
        let mut acc: FxHashMap<Monomial, F::Elem> = FxHashMap::default();
        acc.reserve(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let p = f.mul(ca, cb);
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c = f.add(c, &p))
                    .or_insert(p);
            }
        }
        let order = self.ring.order;
        let mut terms: Vec<Term<F>> = acc.into_iter().filter(|(_, c)| !f.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => {
                let inv = self.ring.field.inv(c).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Display-normal form: monic over `F_p`; integral, primitive, positive
    /// leading coefficient over `Q`.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<&F::Elem> = self.terms.iter().map(|(_, c)| c).collect();
        let k = self.ring.field.normalizing_factor(&coeffs);
        self.scale(&k)
    }

    /// Substitutes `images[i]` for the `i`-th variable. All images must live
    /// in one target ring.
    pub fn substitute(&self, target: &Arc<PolyRing<F>>, images: &[Poly<F>]) -> Poly<F> {
        assert_eq!(images.len(), self.ring.arity());
        let mut powers: Vec<Vec<Poly<F>>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut acc: FxHashMap<Monomial, F::Elem> = FxHashMap::default();
        let f = &self.ring.field;
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exponent(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                prod = &prod * &pw[e];
            }
            for (tm, tc) in prod.terms {
                acc.entry(tm)
                    .and_modify(|x| *x = f.add(x, &tc))
                    .or_insert(tc);
            }
        }
        Poly::from_terms(target, acc.into_iter().collect())
    }

    /// Re-expresses the polynomial in `target`, sending variable `i` to
    /// variable `var_map[i]` of the target ring.
    pub fn map_vars(&self, target: &Arc<PolyRing<F>>, var_map: &[usize]) -> Poly<F> {
        assert_eq!(var_map.len(), self.ring.arity());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; target.arity()];
                for (i, &j) in var_map.iter().enumerate() {
                    e[j] += m.exponent(i);
                }
                (Monomial::from_exponents(&e), c.clone())
            })
            .collect();
        Poly::from_terms(target, terms)
    }

    /// Evaluates at a point of the coefficient field.
    pub fn eval(&self, point: &[F::Elem]) -> F::Elem {
        let f = &self.ring.field;
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    t = f.mul(&t, x);
                }
            }
            acc = f.add(&acc, &t);
        }
        acc
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        let field = &self.ring.field;
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field.format(c);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if k == 0 {
                if neg {
                    write!(out, "-")?;
                }
            } else {
                write!(out, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.deg == 0 {
                write!(out, "{mag}")?;
            } else if mag == "1" {
                write!(out, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(out, "{mag}*{}", self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> std::ops::Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl<'a, F: Field> std::ops::Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl<'a, F: Field> std::ops::Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl<F: Field> std::ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn ring3() -> Arc<PolyRing<Rationals>> {
        PolyRing::new(Rationals, &["x1", "x2", "x3"], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn grevlex_and_lex_examples() {
        let g = MonomialOrder::Grevlex;
        assert_eq!(g.compare(&[1, 0, 1], &[0, 2, 0]).unwrap(), Ordering::Less);
        assert_eq!(g.compare(&[2, 1, 0], &[2, 1, 0]).unwrap(), Ordering::Equal);
        let l = MonomialOrder::Lex;
        assert_eq!(l.compare(&[1, 0, 0], &[0, 3, 0]).unwrap(), Ordering::Greater);
        assert_eq!(
            g.compare(&[1, 0], &[1, 0, 0]),
            Err(PolyError::ArityMismatch(2, 3))
        );
    }

    #[test]
    fn elimination_order_eliminates_first_block() {
        let e = MonomialOrder::Elimination(1);
        // t beats any power of the other variables
        assert_eq!(e.compare(&[1, 0, 0], &[0, 9, 9]).unwrap(), Ordering::Greater);
        assert_eq!(e.compare(&[0, 2, 0], &[0, 1, 1]).unwrap(), Ordering::Greater);
    }

    #[test]
    fn expansion_examples() {
        let r = ring3();
        let x1 = Poly::var(&r, 0);
        let x2 = Poly::var(&r, 1);
        let x3 = Poly::var(&r, 2);
        let p = &(&x1 + &x2) * &(&x1 - &x2);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
        let z = Poly::zero(&r);
        assert_eq!(&p + &z, p);
        let s = (&(&x1 + &x2) + &x3).pow(2);
        assert_eq!(s.to_string(), "x1^2 + 2*x1*x2 + x2^2 + 2*x1*x3 + 2*x2*x3 + x3^2");
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let r = ring3();
        let s = PolyRing::new(Rationals, &["a", "b"], MonomialOrder::Grevlex).unwrap();
        assert_eq!(
            Poly::var(&r, 0).try_add(&Poly::var(&s, 0)),
            Err(PolyError::RingMismatch)
        );
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(3, 0), vec![Monomial::ONE]);
        assert_eq!(monomials_of_degree(6, 3).len(), 56);
        let deg2: Vec<Vec<u32>> = monomials_of_degree(3, 2).iter().map(|m| m.exponents(3)).collect();
        assert_eq!(
            deg2,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn monomial_bit_tricks() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[2, 2, 5]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b).exponents(3), vec![1, 0, 5]);
        assert_eq!(a.lcm(&Monomial::from_exponents(&[0, 3, 1])).exponents(3), vec![1, 3, 1]);
        assert!(a.is_coprime(&Monomial::from_exponents(&[0, 0, 4])));
        assert!(!a.is_coprime(&Monomial::from_exponents(&[0, 1, 4])));
    }

    fn arb_poly(r: Arc<PolyRing<PrimeField>>) -> impl Strategy<Value = Poly<PrimeField>> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), 0u32..32003), 0..6).prop_map(move |ts| {
            let terms = ts
                .into_iter()
                .map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), k))
                .collect();
            Poly::from_terms(&r, terms)
        })
    }

    fn fp_ring() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::default(), &["x1", "x2", "x3"], MonomialOrder::Grevlex).unwrap()
    }

    proptest! {
        #[test]
        fn ring_axioms((f, g, h) in {
            let r = fp_ring();
            (arb_poly(r.clone()), arb_poly(r.clone()), arb_poly(r))
        }) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!((&f * &g).degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
            }
        }

        #[test]
        fn orders_are_total_and_transitive(
            a in prop::array::uniform4(0u32..6),
            b in prop::array::uniform4(0u32..6),
            c in prop::array::uniform4(0u32..6),
        ) {
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex, MonomialOrder::Elimination(2)] {
                let ab = order.compare(&a, &b).unwrap();
                let ba = order.compare(&b, &a).unwrap();
                prop_assert_eq!(ab, ba.reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                let bc = order.compare(&b, &c).unwrap();
                if ab != Ordering::Less && bc != Ordering::Less {
                    prop_assert!(order.compare(&a, &c).unwrap() != Ordering::Less);
                }
                // compatible with multiplication
                let (ma, mb, mc) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
                prop_assert_eq!(order.cmp(&ma.mul(&mc), &mb.mul(&mc)), ab);
            }
        }
    }
}
