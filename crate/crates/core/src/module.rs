//! Finite length graded modules presented as cokernels
//! `\bigoplus_j R(-a_j) --phi--> \bigoplus_i R(-b_i) --> M --> 0`
//! with `n` target and `n + 2` source summands.
//!
//! The piece `[M]_d` is the cokernel of the degree-`d` component of `phi`, a
//! linear map between monomial bases. Target coordinates are ordered by
//! summand, then descending grevlex; the image is put in reduced echelon
//! form and the non-pivot coordinates form the basis of `[M]_d`. For a
//! single summand this is exactly the standard monomial basis of a quotient
//! algebra.

use std::sync::Arc;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::graded::{check_form, GradedModule};
use crate::groebner::Ideal;
use crate::linalg::Matrix;
use crate::minors::{maximal_minors, PolyMatrix};
use crate::poly::{Monomial, Poly, PolyRing};

/// Basis data of one graded piece.
#[derive(Clone, Debug)]
struct Piece<F: Field> {
    /// Target coordinates `(summand, monomial)`.
    coords: Vec<(usize, Monomial)>,
    /// Reduced echelon form of the image, one row per pivot.
    echelon: Matrix<F>,
    pivots: Vec<usize>,
    /// Non-pivot coordinates: the basis of the piece.
    basis: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ModulePresentation<F: Field> {
    ring: Arc<PolyRing<F>>,
    target_shifts: Vec<i32>,
    source_shifts: Vec<i32>,
    phi: Vec<Vec<Poly<F>>>,
    lowest: i32,
    pieces: Vec<Piece<F>>,
}

/// Validates the presentation and certifies finite length: the ideal of
/// `n x n` minors of `phi` must have codimension 3.
pub fn make_module<F: Field>(
    ring: &Arc<PolyRing<F>>,
    target_shifts: Vec<i32>,
    source_shifts: Vec<i32>,
    phi: Vec<Vec<Poly<F>>>,
) -> Result<ModulePresentation<F>> {
    ModulePresentation::new(ring, target_shifts, source_shifts, phi)
}

impl<F: Field> ModulePresentation<F> {
    pub fn new(
        ring: &Arc<PolyRing<F>>,
        target_shifts: Vec<i32>,
        source_shifts: Vec<i32>,
        phi: Vec<Vec<Poly<F>>>,
    ) -> Result<Self> {
        if ring.arity() != 3 {
            return Err(Error::WrongArity {
                expected: 3,
                found: ring.arity(),
            });
        }
        let n = target_shifts.len();
        if n == 0 {
            return Err(Error::Shape("at least one target summand is required".into()));
        }
        if source_shifts.len() != n + 2 {
            return Err(Error::Shape(format!(
                "{} source shifts for {n} target shifts, expected {}",
                source_shifts.len(),
                n + 2
            )));
        }
        if phi.len() != n || phi.iter().any(|row| row.len() != n + 2) {
            return Err(Error::Shape(format!("the matrix must be {n} x {}", n + 2)));
        }
        for (i, row) in phi.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let expected = source_shifts[j] - target_shifts[i];
                if !entry.is_homogeneous() {
                    return Err(Error::NotHomogeneous(entry.to_string()));
                }
                let found = entry.degree().unwrap() as i32;
                if found != expected {
                    return Err(Error::DegreeMismatch {
                        row: i + 1,
                        col: j + 1,
                        expected,
                        found,
                    });
                }
            }
        }
        let minors = if phi.iter().flatten().all(|p| p.is_zero()) {
            Ideal::zero(ring)
        } else {
            let gens = maximal_minors(&PolyMatrix::from_rows(phi.clone()))
                .into_iter()
                .map(|m| m.value)
                .filter(|p| !p.is_zero())
                .collect();
            Ideal::new(ring, gens)
        };
        let dd = minors.dimension_and_degree();
        if dd.dim > 0 || minors.generators().is_empty() {
            let codim = if minors.generators().is_empty() { 0 } else { dd.codim };
            return Err(Error::NotFiniteLength(codim));
        }
        let lowest = *target_shifts.iter().min().unwrap();
        let bound: i32 = source_shifts.iter().sum();
        let mut m = ModulePresentation {
            ring: ring.clone(),
            target_shifts,
            source_shifts,
            phi,
            lowest,
            pieces: Vec::new(),
        };
        m.pieces = (lowest..=bound.max(lowest)).map(|d| m.compute_piece(d)).collect();
        Ok(m)
    }

    /// `R/(f1, f2, f3)` as the cokernel of `[f1 f2 f3]`.
    pub fn from_complete_intersection(ring: &Arc<PolyRing<F>>, gens: [Poly<F>; 3]) -> Result<Self> {
        let shifts = gens
            .iter()
            .map(|g| g.degree().map(|d| d as i32).ok_or_else(|| Error::Shape("zero generator".into())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, vec![0], shifts, vec![gens.to_vec()])
    }

    pub fn target_shifts(&self) -> &[i32] {
        &self.target_shifts
    }

    pub fn source_shifts(&self) -> &[i32] {
        &self.source_shifts
    }

    pub fn matrix(&self) -> &[Vec<Poly<F>>] {
        &self.phi
    }

    /// Degree bound `sum a_j` beyond which every piece vanishes.
    pub fn degree_bound(&self) -> i32 {
        self.source_shifts.iter().sum()
    }

    fn target_coords(&self, d: i32) -> Vec<(usize, Monomial)> {
        let mut coords = Vec::new();
        for (i, &b) in self.target_shifts.iter().enumerate() {
            if d >= b {
                for m in self.ring.monomials_of_degree((d - b) as u32) {
                    coords.push((i, m));
                }
            }
        }
        coords
    }

    fn compute_piece(&self, d: i32) -> Piece<F> {
        let field = self.ring.field();
        let coords = self.target_coords(d);
        let index = |i: usize, m: &Monomial| coords.iter().position(|c| c.0 == i && c.1 == *m).unwrap();
        let mut rows = Vec::new();
        for (j, &a) in self.source_shifts.iter().enumerate() {
            if d < a {
                continue;
            }
            for m in self.ring.monomials_of_degree((d - a) as u32) {
                let mut v = vec![field.zero(); coords.len()];
                for (i, row) in self.phi.iter().enumerate() {
                    for (mm, c) in row[j].terms() {
                        let k = index(i, &mm.mul(&m));
                        v[k] = field.add(&v[k], c);
                    }
                }
                rows.push(v);
            }
        }
        let (echelon, pivots) = if rows.is_empty() {
            (Matrix::zeros(field, 0, coords.len()), Vec::new())
        } else {
            let (mut e, p) = Matrix::from_rows(field, rows).rref();
            e = Matrix::from_rows(field, (0..p.len()).map(|r| e.row(r).to_vec()).collect::<Vec<_>>());
            if p.is_empty() {
                e = Matrix::zeros(field, 0, coords.len());
            }
            (e, p)
        };
        let basis = (0..coords.len()).filter(|c| !pivots.contains(c)).collect();
        Piece {
            coords,
            echelon,
            pivots,
            basis,
        }
    }

    fn piece(&self, d: i32) -> Option<&Piece<F>> {
        if d < self.lowest {
            return None;
        }
        self.pieces.get((d - self.lowest) as usize)
    }

    /// Basis of `[M]_d` as `(summand, monomial)` representatives.
    pub fn graded_piece(&self, d: i32) -> Vec<(usize, Monomial)> {
        match self.piece(d) {
            None => Vec::new(),
            Some(p) => p.basis.iter().map(|&k| p.coords[k]).collect(),
        }
    }

    /// Coordinates in `[M]_d` of a target vector given on the coordinates
    /// of degree `d`.
    fn reduce(&self, p: &Piece<F>, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let field = self.ring.field();
        for (r, &pc) in p.pivots.iter().enumerate() {
            if field.is_zero(&v[pc]) {
                continue;
            }
            let c = v[pc].clone();
            for (k, x) in p.echelon.row(r).iter().enumerate() {
                if !field.is_zero(x) {
                    v[k] = field.sub(&v[k], &field.mul(&c, x));
                }
            }
        }
        p.basis.iter().map(|&k| v[k].clone()).collect()
    }
}

/// Dimension of `[M]_d` together with its basis.
pub fn module_graded_piece<F: Field>(m: &ModulePresentation<F>, d: i32) -> (usize, Vec<(usize, Monomial)>) {
    let b = m.graded_piece(d);
    (b.len(), b)
}

/// Matrix of multiplication by the form `f` from `[M]_i`.
pub fn module_multiplication_matrix<F: Field>(m: &ModulePresentation<F>, f: &Poly<F>, i: i32) -> Result<Matrix<F>> {
    m.multiplication_matrix(f, i)
}

impl<F: Field> GradedModule<F> for ModulePresentation<F> {
    fn ring(&self) -> &Arc<PolyRing<F>> {
        &self.ring
    }

    fn degree_range(&self) -> Option<(i32, i32)> {
        let dims: Vec<(i32, usize)> = self
            .pieces
            .iter()
            .enumerate()
            .map(|(k, p)| (self.lowest + k as i32, p.basis.len()))
            .filter(|(_, n)| *n > 0)
            .collect();
        Some((dims.first()?.0, dims.last()?.0))
    }

    fn piece_dim(&self, d: i32) -> usize {
        self.piece(d).map_or(0, |p| p.basis.len())
    }

    fn multiplication_map(&self, f: &Poly<F>, d: u32, i: i32) -> Result<Matrix<F>> {
        check_form(f, d)?;
        let field = self.ring.field();
        let target_degree = i + d as i32;
        let (Some(src), Some(dst)) = (self.piece(i), self.piece(target_degree)) else {
            return Ok(Matrix::zeros(field, self.piece_dim(target_degree), self.piece_dim(i)));
        };
        let mut out = Matrix::zeros(field, dst.basis.len(), src.basis.len());
        if f.is_zero() || dst.basis.is_empty() {
            return Ok(out);
        }
        for (c, &k) in src.basis.iter().enumerate() {
            let (summand, mono) = src.coords[k];
            let mut v = vec![field.zero(); dst.coords.len()];
            for (fm, fc) in f.terms() {
                let target = (summand, fm.mul(&mono));
                let pos = dst.coords.iter().position(|x| *x == target).expect("coordinate exists");
                v[pos] = field.add(&v[pos], fc);
            }
            for (r, x) in self.reduce(dst, v).into_iter().enumerate() {
                out.set(r, c, x);
            }
        }
        Ok(out)
    }
}
