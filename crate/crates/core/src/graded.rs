//! Common interface of the finite length graded objects whose multiplication
//! maps are studied: quotient algebras and presented modules.

use std::sync::Arc;

use crate::coeff::Field;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::poly::{Poly, PolyRing};

pub trait GradedModule<F: Field>: Send + Sync {
    /// The ambient polynomial ring in `x1, x2, x3`.
    fn ring(&self) -> &Arc<PolyRing<F>>;

    fn field(&self) -> &F {
        self.ring().field()
    }

    /// Lowest and highest degree with a nonzero piece; `None` for the zero
    /// module.
    fn degree_range(&self) -> Option<(i32, i32)>;

    fn piece_dim(&self, d: i32) -> usize;

    /// Matrix of multiplication by `f`, a form of degree `d` or zero, from
    /// degree `i` to degree `i + d` in the fixed bases of both pieces.
    fn multiplication_map(&self, f: &Poly<F>, d: u32, i: i32) -> Result<Matrix<F>>;

    /// [`GradedModule::multiplication_map`] with `d = deg f`; the zero
    /// polynomial is treated as a form of degree 0.
    fn multiplication_matrix(&self, f: &Poly<F>, i: i32) -> Result<Matrix<F>> {
        let d = form_degree(f)?.unwrap_or(0);
        self.multiplication_map(f, d, i)
    }

    /// Dimensions of the nonzero range of degrees.
    fn hilbert_values(&self) -> Vec<usize> {
        match self.degree_range() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..=hi).map(|d| self.piece_dim(d)).collect(),
        }
    }
}

/// Checks that `f` is a homogeneous form (zero allowed) and returns its
/// degree, or `None` for zero.
pub(crate) fn form_degree<F: Field>(f: &Poly<F>) -> Result<Option<u32>> {
    if f.is_zero() {
        return Ok(None);
    }
    if !f.is_homogeneous() {
        return Err(crate::error::Error::NotHomogeneous(f.to_string()));
    }
    Ok(f.degree())
}

/// Like [`form_degree`] but also checks that a nonzero `f` has degree `d`.
pub(crate) fn check_form<F: Field>(f: &Poly<F>, d: u32) -> Result<()> {
    match form_degree(f)? {
        Some(k) if k != d => Err(crate::error::Error::NotHomogeneous(format!("{f} (expected degree {d})"))),
        _ => Ok(()),
    }
}
