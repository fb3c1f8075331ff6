//! Graded Artinian quotients `A = R/I` of `R = k[x1, x2, x3]`.
//!
//! Each graded piece `[A]_d` carries the basis of standard monomials of
//! degree `d` (monomials outside the leading-term ideal), sorted descending
//! in grevlex. Coordinates of an element are read off its normal form.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::graded::{check_form, GradedModule};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};

/// Variable names of the ambient ring.
pub const AMBIENT_VARS: [&str; 3] = ["x1", "x2", "x3"];

/// `k[x1, x2, x3]` with grevlex order.
pub fn ambient_ring<F: Field>(field: F) -> Arc<PolyRing<F>> {
    PolyRing::new(field, &AMBIENT_VARS, MonomialOrder::Grevlex).expect("three variables")
}

/// Degrees `d1 <= d2 <= d3` of a complete intersection in three variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CIType([u32; 3]);

impl CIType {
    /// Sorts the degrees; each must be at least 1 and the socle degree
    /// `d1 + d2 + d3 - 3` nonnegative.
    pub fn new(d1: u32, d2: u32, d3: u32) -> Result<Self> {
        let mut d = [d1, d2, d3];
        d.sort_unstable();
        if d[0] == 0 {
            return Err(Error::InvalidType(format!("degrees must be positive, got {d1} {d2} {d3}")));
        }
        if d[2] > crate::poly::MAX_EXPONENT {
            return Err(Error::InvalidType(format!("degree {} is too large", d[2])));
        }
        Ok(CIType(d))
    }

    pub fn degrees(&self) -> [u32; 3] {
        self.0
    }

    pub fn socle_degree(&self) -> u32 {
        self.0.iter().sum::<u32>() - 3
    }
}

impl fmt::Display for CIType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Hilbert function `h_0, ..., h_e` of an Artinian graded object starting in
/// degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    pub fn new(values: Vec<usize>) -> Self {
        HilbertFunction(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `h_d`, zero outside the stored range.
    pub fn get(&self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        self.0.get(d as usize).copied().unwrap_or(0)
    }

    /// Largest degree with `h_d != 0`, or `None` if all vanish.
    pub fn socle_degree(&self) -> Option<u32> {
        self.0.iter().rposition(|&h| h != 0).map(|e| e as u32)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let v = &self.0[..self.socle_degree().map_or(0, |e| e as usize + 1)];
        v.iter().eq(v.iter().rev())
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|h| h.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Hilbert function of a complete intersection of the given type, the
/// coefficients of `prod (1 + t + ... + t^(d_i - 1))`.
pub fn ci_hilbert_function(t: CIType) -> HilbertFunction {
    let mut acc = vec![1usize];
    for d in t.degrees() {
        let mut next = vec![0usize; acc.len() + d as usize - 1];
        for (i, a) in acc.iter().enumerate() {
            for slot in &mut next[i..i + d as usize] {
                *slot += a;
            }
        }
        acc = next;
    }
    HilbertFunction(acc)
}

/// An Artinian quotient `R/I` with cached Gröbner basis and bases of all
/// graded pieces.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra<F: Field> {
    ring: Arc<PolyRing<F>>,
    ideal: Ideal<F>,
    bases: Vec<Vec<Monomial>>,
    hf: HilbertFunction,
    ci_type: Option<CIType>,
}

/// Builds `R/(gens)`; the generators must be homogeneous and define a zero
/// dimensional scheme.
pub fn make_quotient<F: Field>(ring: &Arc<PolyRing<F>>, gens: Vec<Poly<F>>) -> Result<QuotientAlgebra<F>> {
    QuotientAlgebra::new(ring, gens)
}

impl<F: Field> QuotientAlgebra<F> {
    pub fn new(ring: &Arc<PolyRing<F>>, gens: Vec<Poly<F>>) -> Result<Self> {
        if ring.arity() != 3 {
            return Err(Error::WrongArity {
                expected: 3,
                found: ring.arity(),
            });
        }
        if ring.order() != MonomialOrder::Grevlex {
            return Err(Error::InvalidType("the ambient ring must use grevlex".into()));
        }
        if let Some(g) = gens.iter().find(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous(g.to_string()));
        }
        let ideal = Ideal::new(ring, gens);
        let gb = ideal.groebner_basis();
        let dd = gb.dimension_and_degree();
        if dd.dim < 0 {
            return Err(Error::ZeroAlgebra);
        }
        if dd.dim > 0 {
            return Err(Error::NotArtinian(dd.dim));
        }
        let mut bases = Vec::new();
        for d in 0u32.. {
            let basis = gb.standard_monomials(d);
            if basis.is_empty() {
                break;
            }
            bases.push(basis);
        }
        let hf = HilbertFunction(bases.iter().map(|b| b.len()).collect());
        Ok(QuotientAlgebra {
            ring: ring.clone(),
            ideal,
            bases,
            hf,
            ci_type: None,
        })
    }

    /// `R/(x1^d1, x2^d2, x3^d3)`.
    pub fn monomial_ci(field: F, t: CIType) -> Self {
        let ring = ambient_ring(field);
        let [d1, d2, d3] = t.degrees();
        let gens = vec![
            Poly::monomial(&ring, Monomial::var_power(0, d1)),
            Poly::monomial(&ring, Monomial::var_power(1, d2)),
            Poly::monomial(&ring, Monomial::var_power(2, d3)),
        ];
        let mut a = Self::new(&ring, gens).expect("monomial complete intersection");
        a.ci_type = Some(t);
        a
    }

    /// Complete intersection of three dense forms of the given degrees with
    /// uniformly random coefficients, drawn from a generator seeded with
    /// `seed`. Non-Artinian samples are redrawn from the same stream.
    pub fn random_ci(field: F, t: CIType, seed: u64) -> Self {
        let ring = ambient_ring(field);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let gens: Vec<Poly<F>> = t
                .degrees()
                .iter()
                .map(|&d| random_form(&ring, d, &mut rng))
                .collect();
            if let Ok(mut a) = Self::new(&ring, gens) {
                if a.hf == ci_hilbert_function(t) {
                    a.ci_type = Some(t);
                    return a;
                }
            }
        }
    }

    pub fn with_ci_type(mut self, t: CIType) -> Self {
        self.ci_type = Some(t);
        self
    }

    pub fn ci_type(&self) -> Option<CIType> {
        self.ci_type
    }

    pub fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn hilbert_function(&self) -> &HilbertFunction {
        &self.hf
    }

    pub fn socle_degree(&self) -> u32 {
        self.hf.socle_degree().expect("h_0 = 1")
    }

    pub fn dimension(&self) -> usize {
        self.hf.total()
    }

    /// Basis of `[A]_d`, descending in grevlex; empty outside `0..=e`.
    pub fn standard_monomials(&self, d: i32) -> &[Monomial] {
        if d < 0 {
            return &[];
        }
        self.bases.get(d as usize).map_or(&[], |b| b.as_slice())
    }

    /// Coordinates of a form of degree `d` in the basis of `[A]_d`.
    pub fn coordinates(&self, f: &Poly<F>, d: i32) -> Vec<F::Elem> {
        let basis = self.standard_monomials(d);
        let field = self.field();
        let mut out = vec![field.zero(); basis.len()];
        if basis.is_empty() || f.is_zero() {
            return out;
        }
        let nf = self.ideal.groebner_basis().normal_form(f);
        let order = self.ring.order();
        for (m, c) in nf.terms() {
            let pos = basis
                .binary_search_by(|b| order.cmp(m, b))
                .expect("normal form lies in the span of standard monomials of its degree");
            out[pos] = c.clone();
        }
        out
    }

    /// Whether `[A]_i` contains a nonzero element killed by `x1, x2, x3`.
    pub fn has_socle_in_degree(&self, i: i32) -> bool {
        self.socle_dimension(i) > 0
    }

    pub fn socle_dimension(&self, i: i32) -> usize {
        let h = self.hf.get(i as i64);
        if h == 0 {
            return 0;
        }
        let maps: Vec<Matrix<F>> = (0..3)
            .map(|k| {
                self.multiplication_map(&Poly::var(&self.ring, k), 1, i)
                    .expect("variables are linear forms")
            })
            .collect();
        let stacked = maps[1..].iter().fold(maps[0].clone(), |acc, m| acc.vstack(m));
        h - stacked.rank()
    }

    pub fn is_gorenstein(&self) -> bool {
        let e = self.socle_degree() as i32;
        (0..=e).map(|i| self.socle_dimension(i)).sum::<usize>() == 1
    }
}

impl<F: Field> GradedModule<F> for QuotientAlgebra<F> {
    fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    fn degree_range(&self) -> Option<(i32, i32)> {
        Some((0, self.socle_degree() as i32))
    }

    fn piece_dim(&self, d: i32) -> usize {
        self.hf.get(d as i64)
    }

    fn multiplication_map(&self, f: &Poly<F>, d: u32, i: i32) -> Result<Matrix<F>> {
        check_form(f, d)?;
        let field = self.field();
        let rows = self.piece_dim(i + d as i32);
        let source = self.standard_monomials(i);
        let mut m = Matrix::zeros(field, rows, source.len());
        if rows == 0 || f.is_zero() {
            return Ok(m);
        }
        for (c, b) in source.iter().enumerate() {
            let prod = f.mul_term(b, &field.one());
            for (r, v) in self.coordinates(&prod, i + d as i32).into_iter().enumerate() {
                m.set(r, c, v);
            }
        }
        Ok(m)
    }
}

/// A form of degree `d` with every coefficient drawn from `rng`.
pub fn random_form<F: Field, R: rand::Rng + ?Sized>(ring: &Arc<PolyRing<F>>, d: u32, rng: &mut R) -> Poly<F> {
    let field = ring.field();
    let terms = ring
        .monomials_of_degree(d)
        .into_iter()
        .map(|m| (m, field.random(rng)))
        .collect();
    Poly::from_terms(ring, terms)
}
