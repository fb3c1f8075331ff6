//! Artinian Gorenstein algebras through Macaulay duality.
//!
//! `R = k[x1, x2, x3]` acts on the dual ring `k[X1, X2, X3]` by contraction,
//! `x^a o X^b = X^(b - a)` when `a <= b` and zero otherwise. For a form `F`
//! of degree `e` the annihilator `Ann(F)` is a Gorenstein ideal with socle
//! degree `e`; its degree-`d` piece is the kernel of the catalecticant map
//! `[R]_d -> [dual]_(e-d)`, `f -> f o F`.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ambient_ring, random_form, HilbertFunction, QuotientAlgebra};
use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::poly::{MonomialOrder, Poly, PolyRing};

pub const DUAL_VARS: [&str; 3] = ["X1", "X2", "X3"];

pub fn dual_ring<F: Field>(field: F) -> Arc<PolyRing<F>> {
    PolyRing::new(field, &DUAL_VARS, MonomialOrder::Grevlex).expect("three variables")
}

/// A nonzero form in the dual variables.
#[derive(Clone, Debug)]
pub struct DualGenerator<F: Field> {
    form: Poly<F>,
    degree: u32,
}

impl<F: Field> DualGenerator<F> {
    /// Over `F_p` the characteristic must exceed the degree.
    pub fn new(form: Poly<F>) -> Result<Self> {
        if form.ring().arity() != 3 {
            return Err(Error::WrongArity {
                expected: 3,
                found: form.ring().arity(),
            });
        }
        if form.is_zero() || !form.is_homogeneous() {
            return Err(Error::NotHomogeneous(form.to_string()));
        }
        let degree = form.degree().unwrap();
        let p = form.field().characteristic();
        if p != 0 && p <= degree as u64 {
            return Err(Error::CharacteristicTooSmall { p, e: degree });
        }
        Ok(DualGenerator { form, degree })
    }

    pub fn form(&self) -> &Poly<F> {
        &self.form
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// `f o F` for `f` in the ambient ring and `F` in the dual ring.
pub fn contract<F: Field>(f: &Poly<F>, dual: &Poly<F>) -> Poly<F> {
    let field = dual.field();
    let mut terms = Vec::new();
    for (fm, fc) in f.terms() {
        for (dm, dc) in dual.terms() {
            if fm.divides(dm) {
                terms.push((fm.quotient(dm), field.mul(fc, dc)));
            }
        }
    }
    Poly::from_terms(dual.ring(), terms)
}

/// Matrix of `[R]_d -> [dual]_(e-d)`: columns indexed by the degree-`d`
/// monomials of `R`, rows by the degree-`(e-d)` dual monomials, both
/// descending in grevlex.
pub fn catalecticant<F: Field>(g: &DualGenerator<F>, d: u32) -> Matrix<F> {
    let dual = g.form.ring();
    let field = dual.field();
    let cols = dual.monomials_of_degree(d);
    if d > g.degree {
        return Matrix::zeros(field, 0, cols.len());
    }
    let rows = dual.monomials_of_degree(g.degree - d);
    let mut m = Matrix::zeros(field, rows.len(), cols.len());
    for (dm, dc) in g.form.terms() {
        for (c, cm) in cols.iter().enumerate() {
            if cm.divides(dm) {
                let q = cm.quotient(dm);
                let r = rows.iter().position(|x| *x == q).expect("degree e - d monomial");
                m.set(r, c, field.add(m.get(r, c), dc));
            }
        }
    }
    m
}

/// `h_d = rank` of the degree-`d` catalecticant, `d = 0..=e`.
pub fn catalecticant_hilbert_function<F: Field>(g: &DualGenerator<F>) -> HilbertFunction {
    HilbertFunction::new((0..=g.degree).map(|d| catalecticant(g, d).rank()).collect())
}

/// `Ann(F)` in `k[x1, x2, x3]`. Kernel vectors are added degree by degree
/// only where the ideal generated so far is too small.
pub fn apolar_ideal<F: Field>(g: &DualGenerator<F>) -> Ideal<F> {
    let field = g.form.field().clone();
    let r = ambient_ring(field.clone());
    let mut gens: Vec<Poly<F>> = Vec::new();
    for d in 1..=g.degree + 1 {
        let monos = r.monomials_of_degree(d);
        let kernel = catalecticant(g, d).kernel();
        if kernel.is_empty() {
            continue;
        }
        let current = Ideal::new(&r, gens.clone());
        let present = if gens.is_empty() {
            0
        } else {
            let lms = current.groebner_basis().leading_monomials();
            monos.iter().filter(|m| lms.iter().any(|l| l.divides(m))).count()
        };
        if present == kernel.len() {
            continue;
        }
        for v in kernel {
            let f = Poly::from_terms(&r, monos.iter().cloned().zip(v).collect());
            if gens.is_empty() || !current.contains(&f) {
                gens.push(f);
            }
        }
    }
    Ideal::new(&r, gens)
}

/// `R / Ann(F)`.
pub fn apolar_algebra<F: Field>(g: &DualGenerator<F>) -> Result<QuotientAlgebra<F>> {
    let ideal = apolar_ideal(g);
    QuotientAlgebra::new(ideal.ring(), ideal.generators().to_vec())
}

/// Apolar algebra of a dense random form of degree `e`.
pub fn random_gorenstein<F: Field>(field: F, e: u32, seed: u64) -> Result<QuotientAlgebra<F>> {
    random_dual_generator(field, e, seed).and_then(|g| apolar_algebra(&g))
}

pub fn random_dual_generator<F: Field>(field: F, e: u32, seed: u64) -> Result<DualGenerator<F>> {
    if e == 0 {
        return Err(Error::InvalidType("socle degree must be positive".into()));
    }
    let dual = dual_ring(field);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let f = random_form(&dual, e, &mut rng);
        if !f.is_zero() {
            return DualGenerator::new(f);
        }
    }
}

/// `(h_0, h_1 - h_0, ..., h_s - h_(s-1))` with `s = floor(e/2)`.
pub fn g_vector(hf: &HilbertFunction) -> Vec<i64> {
    let e = hf.socle_degree().unwrap_or(0) as i64;
    (0..=e / 2)
        .map(|i| hf.get(i) as i64 - if i == 0 { 0 } else { hf.get(i - 1) as i64 })
        .collect()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Macaulay's bound `h^<d>` on the growth from degree `d` to `d + 1`.
pub fn macaulay_bound(h: u64, d: u64) -> u64 {
    if h == 0 {
        return 0;
    }
    let mut rest = h;
    let mut out = 0;
    let mut k = d;
    while rest > 0 && k > 0 {
        let mut n = k;
        while binom(n + 1, k) <= rest {
            n += 1;
        }
        rest -= binom(n, k);
        out += binom(n + 1, k + 1);
        k -= 1;
    }
    out
}

/// Whether `g` is the Hilbert function of a standard graded algebra.
pub fn is_o_sequence(g: &[i64]) -> bool {
    if g.is_empty() || g[0] != 1 || g.iter().any(|&x| x < 0) {
        return false;
    }
    (1..g.len().saturating_sub(1)).all(|d| g[d + 1] as u64 <= macaulay_bound(g[d] as u64, d as u64))
}

/// Symmetric with an O-sequence as the first half of its first difference.
pub fn is_si_sequence(hf: &HilbertFunction) -> bool {
    hf.values().first() == Some(&1) && hf.is_symmetric() && is_o_sequence(&g_vector(hf))
}

/// Grows as `1, 2, 3, ...`, then stays flat for one run, then strictly
/// decreases.
pub fn is_decreasing_type(g: &[i64]) -> bool {
    let mut i = 0;
    while i < g.len() && g[i] == i as i64 + 1 {
        i += 1;
    }
    if i == 0 {
        return g.is_empty();
    }
    let top = g[i - 1];
    while i < g.len() && g[i] == top {
        i += 1;
    }
    let mut prev = top;
    while i < g.len() {
        if g[i] >= prev {
            return false;
        }
        prev = g[i];
        i += 1;
    }
    true
}
