//! The non-Lefschetz locus of conics.
//!
//! A conic `C = a1 x1^2 + a2 x1x2 + a3 x1x3 + a4 x2^2 + a5 x2x3 + a6 x3^2`
//! with indeterminate coefficients acts on a graded object by degree-two
//! multiplication maps. In degree `i` that map is the matrix `B_i` of linear
//! forms in `S = k[a1..a6]`; its maximal minors cut out the conics failing
//! maximal rank from degree `i`, and the locus is the union over all degrees.

use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{CIType, HilbertFunction, QuotientAlgebra};
use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::graded::{form_degree, GradedModule};
use crate::groebner::{DimensionDegree, Ideal};
use crate::linalg::Matrix;
use crate::minors::{maximal_minors, PolyMatrix};
use crate::poly::{Monomial, MonomialOrder, Poly, PolyRing};

pub const PARAM_VARS: [&str; 6] = ["a1", "a2", "a3", "a4", "a5", "a6"];

/// `S = k[a1, ..., a6]` with grevlex order.
pub fn parameter_ring<F: Field>(field: F) -> Arc<PolyRing<F>> {
    PolyRing::new(field, &PARAM_VARS, MonomialOrder::Grevlex).expect("six variables")
}

/// The degree-two monomial paired with each parameter `a_k`.
pub fn conic_monomials() -> [Monomial; 6] {
    let m = |e: [u32; 3]| Monomial::from_exponents(&e);
    [m([2, 0, 0]), m([1, 1, 0]), m([1, 0, 1]), m([0, 2, 0]), m([0, 1, 1]), m([0, 0, 2])]
}

/// `sum c_k m_k` in the ambient ring.
pub fn conic_from_coefficients<F: Field>(ring: &Arc<PolyRing<F>>, c: &[F::Elem]) -> Poly<F> {
    assert_eq!(c.len(), 6);
    let terms = conic_monomials().into_iter().zip(c.iter().cloned()).collect();
    Poly::from_terms(ring, terms)
}

/// Coefficients `(c1, ..., c6)` of a quadratic form.
pub fn conic_coefficients<F: Field>(conic: &Poly<F>) -> Result<Vec<F::Elem>> {
    match form_degree(conic)? {
        Some(2) | None => Ok(conic_monomials().iter().map(|m| conic.coeff(m)).collect()),
        Some(d) => Err(Error::NotDegreeTwo(d)),
    }
}

/// `B_i = sum_k a_k M_k` stored through its six coefficient matrices.
#[derive(Clone, Debug)]
pub struct GenericConicMatrix<F: Field> {
    degree: i32,
    params: Arc<PolyRing<F>>,
    parts: Vec<Matrix<F>>,
}

impl<F: Field> GenericConicMatrix<F> {
    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn rows(&self) -> usize {
        self.parts[0].rows()
    }

    pub fn cols(&self) -> usize {
        self.parts[0].cols()
    }

    pub fn parameter_ring(&self) -> &Arc<PolyRing<F>> {
        &self.params
    }

    /// Matrix of multiplication by the `k`-th conic monomial.
    pub fn coefficient_matrix(&self, k: usize) -> &Matrix<F> {
        &self.parts[k]
    }

    /// The linear form in entry `(r, c)`.
    pub fn entry(&self, r: usize, c: usize) -> Poly<F> {
        let terms = (0..6)
            .map(|k| (Monomial::var_power(k, 1), self.parts[k].get(r, c).clone()))
            .collect();
        Poly::from_terms(&self.params, terms)
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix<F> {
        if self.rows() == 0 || self.cols() == 0 {
            return PolyMatrix::empty(self.rows(), self.cols());
        }
        PolyMatrix::from_rows(
            (0..self.rows())
                .map(|r| (0..self.cols()).map(|c| self.entry(r, c)).collect())
                .collect(),
        )
    }

    /// Substitutes `a_k -> c_k`.
    pub fn specialize(&self, c: &[F::Elem]) -> Matrix<F> {
        let f = self.params.field();
        let mut out = Matrix::zeros(f, self.rows(), self.cols());
        for r in 0..self.rows() {
            for col in 0..self.cols() {
                let mut acc = f.zero();
                for (k, ck) in c.iter().enumerate() {
                    acc = f.add(&acc, &f.mul(ck, self.parts[k].get(r, col)));
                }
                out.set(r, col, acc);
            }
        }
        out
    }

    /// Restriction to the affine subspace `a = p + sum_j t_j v_j`, as a
    /// matrix over `k[t_1..t_c]`.
    pub fn restrict(&self, target: &Arc<PolyRing<F>>, point: &[F::Elem], directions: &[Vec<F::Elem>]) -> PolyMatrix<F> {
        if self.rows() == 0 || self.cols() == 0 {
            return PolyMatrix::empty(self.rows(), self.cols());
        }
        let base = self.specialize(point);
        let dirs: Vec<Matrix<F>> = directions.iter().map(|v| self.specialize(v)).collect();
        PolyMatrix::from_rows(
            (0..self.rows())
                .map(|r| {
                    (0..self.cols())
                        .map(|c| {
                            let mut terms = vec![(Monomial::ONE, base.get(r, c).clone())];
                            for (j, d) in dirs.iter().enumerate() {
                                terms.push((Monomial::var_power(j, 1), d.get(r, c).clone()));
                            }
                            Poly::from_terms(target, terms)
                        })
                        .collect()
                })
                .collect(),
        )
    }
}

/// `B_i` for a graded object. Degrees with both `[M]_i` and `[M]_{i+2}`
/// zero are rejected.
pub fn generic_conic_matrix<F: Field, M: GradedModule<F> + ?Sized>(m: &M, i: i32) -> Result<GenericConicMatrix<F>> {
    let (lo, hi) = m.degree_range().unwrap_or((0, -1));
    if i < lo - 2 || i > hi {
        return Err(Error::DegreeOutOfRange(i, lo - 2, hi));
    }
    let ring = m.ring();
    let parts = conic_monomials()
        .iter()
        .map(|mono| m.multiplication_map(&Poly::monomial(ring, *mono), 2, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(GenericConicMatrix {
        degree: i,
        params: parameter_ring(m.field().clone()),
        parts,
    })
}

/// Ideal of maximal minors of `B`; the unit ideal when a side is empty.
pub fn minors_ideal<F: Field>(b: &GenericConicMatrix<F>) -> Ideal<F> {
    let s = &b.params;
    if b.rows() == 0 || b.cols() == 0 {
        return Ideal::unit(s);
    }
    let gens = maximal_minors(&b.to_poly_matrix())
        .into_iter()
        .map(|m| m.value)
        .filter(|p| !p.is_zero())
        .collect();
    Ideal::new(s, gens)
}

/// Expected codimension of the locus of a complete intersection.
pub fn expected_codim_ci(t: CIType) -> i32 {
    let [d1, d2, d3] = t.degrees();
    let e = t.socle_degree();
    if e.is_multiple_of(2) || d3 > d1 + d2 {
        1
    } else if d3 == d1 + d2 {
        2
    } else {
        3
    }
}

/// Middle degree `floor(e/2) - 1`.
pub fn middle_degree(e: u32) -> i32 {
    (e / 2) as i32 - 1
}

/// `min(|h_{m+2} - h_m| + 1, 6)` at the middle degree; 6 when there is no
/// degree to test.
pub fn expected_codim_locus(hf: &HilbertFunction) -> i32 {
    let Some(e) = hf.socle_degree() else { return 6 };
    if e < 2 {
        return 6;
    }
    let m = middle_degree(e) as i64;
    let diff = (hf.get(m + 2) as i64 - hf.get(m) as i64).abs();
    (diff as i32 + 1).min(6)
}

/// Outcome of a single conic rank test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LefschetzVerdict {
    pub lefschetz: bool,
    /// First degree `i` where `x C : [M]_i -> [M]_{i+2}` is not of maximal
    /// rank.
    pub failing_degree: Option<i32>,
    pub ranks: Vec<(i32, usize, usize)>,
}

/// Tests whether multiplication by the quadratic form `conic` has maximal
/// rank in every degree.
pub fn is_lefschetz_conic<F: Field, M: GradedModule<F> + ?Sized>(m: &M, conic: &Poly<F>) -> Result<LefschetzVerdict> {
    if let Some(d) = form_degree(conic)? {
        if d != 2 {
            return Err(Error::NotDegreeTwo(d));
        }
    }
    rank_profile(m, conic, 2)
}

fn rank_profile<F: Field, M: GradedModule<F> + ?Sized>(m: &M, f: &Poly<F>, d: u32) -> Result<LefschetzVerdict> {
    let mut verdict = LefschetzVerdict {
        lefschetz: true,
        failing_degree: None,
        ranks: Vec::new(),
    };
    let Some((lo, hi)) = m.degree_range() else { return Ok(verdict) };
    for i in lo..=hi - d as i32 {
        let mat = m.multiplication_map(f, d, i)?;
        let rank = mat.rank();
        let full = mat.rows().min(mat.cols());
        verdict.ranks.push((i, rank, full));
        if rank < full && verdict.lefschetz {
            verdict.lefschetz = false;
            verdict.failing_degree = Some(i);
        }
    }
    Ok(verdict)
}

/// Result of a randomized search for a Lefschetz element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub found: bool,
    /// Coefficients of the linear form on `x1, x2, x3`.
    pub linear_form: Option<Vec<String>>,
    pub trials_used: usize,
    pub seed: u64,
}

/// Samples up to `trials` random linear forms `l` and stops at the first for
/// which `x l^power` has maximal rank in every degree.
fn lefschetz_search<F: Field, M: GradedModule<F> + ?Sized>(m: &M, power: u32, seed: u64, trials: usize) -> Certificate {
    let ring = m.ring();
    let field = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 1..=trials.max(1) {
        let coeffs: Vec<F::Elem> = (0..3).map(|_| field.random(&mut rng)).collect();
        let l = Poly::from_terms(
            ring,
            coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_power(k, 1), c.clone()))
                .collect(),
        );
        let f = l.pow(power);
        let ok = rank_profile(m, &f, power).map(|v| v.lefschetz).unwrap_or(false);
        if ok && !l.is_zero() {
            return Certificate {
                found: true,
                linear_form: Some(coeffs.iter().map(|c| field.format(c)).collect()),
                trials_used: t,
                seed,
            };
        }
    }
    Certificate {
        found: false,
        linear_form: None,
        trials_used: trials.max(1),
        seed,
    }
}

/// Weak Lefschetz check: success certifies the property, failure is
/// inconclusive.
pub fn wlp_check<F: Field, M: GradedModule<F> + ?Sized>(m: &M, seed: u64, trials: usize) -> Certificate {
    lefschetz_search(m, 1, seed, trials)
}

/// Strong Lefschetz check at range 2, multiplication by `l^2`.
pub fn slp_range2_check<F: Field, M: GradedModule<F> + ?Sized>(m: &M, seed: u64, trials: usize) -> Certificate {
    lefschetz_search(m, 2, seed, trials)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocusMode {
    FullIntersection,
    MiddleOnly,
}

#[derive(Clone, Debug)]
pub struct LocusOptions {
    pub mode: LocusMode,
    pub seed: u64,
    pub wlp_trials: usize,
    /// Also run the slicing estimate with this many slices per codimension.
    pub slicing: Option<usize>,
    /// Skip the exact Gröbner codimension (slicing only).
    pub exact: bool,
}

impl Default for LocusOptions {
    fn default() -> Self {
        LocusOptions {
            mode: LocusMode::FullIntersection,
            seed: 1,
            wlp_trials: 3,
            slicing: None,
            exact: true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DegreeIdeal<F: Field> {
    pub degree: i32,
    pub shape: (usize, usize),
    pub ideal: Ideal<F>,
}

/// Everything computed about the locus of one graded object.
#[derive(Clone, Debug)]
pub struct LocusReport<F: Field> {
    pub field: String,
    pub ci_type: Option<CIType>,
    pub hilbert_function: Vec<usize>,
    pub lowest_degree: i32,
    pub socle_degree: Option<i32>,
    pub mode: LocusMode,
    pub per_degree: Vec<DegreeIdeal<F>>,
    /// `None` when only the slicing estimate was requested.
    pub total: Option<Ideal<F>>,
    pub codim: Option<i32>,
    pub degree: Option<i64>,
    pub expected_codim: i32,
    pub wlp: Option<Certificate>,
    pub slicing: Option<SlicingEstimate>,
    pub seeds: Vec<u64>,
    pub seconds: f64,
}

/// Middle mode needs a Gorenstein quotient with a Lefschetz element.
pub fn locus_ideal<F: Field>(a: &QuotientAlgebra<F>, opts: &LocusOptions) -> Result<LocusReport<F>> {
    let mut wlp = None;
    if opts.mode == LocusMode::MiddleOnly {
        if a.ci_type().is_none() && !a.is_gorenstein() {
            return Err(Error::MiddleModeUnjustified("the algebra is not Gorenstein".into()));
        }
        let cert = wlp_check(a, opts.seed, opts.wlp_trials);
        if !cert.found {
            return Err(Error::MiddleModeUnjustified(format!(
                "no weak Lefschetz element found in {} trials",
                cert.trials_used
            )));
        }
        wlp = Some(cert);
    }
    let mut report = locus_of_module(a, opts)?;
    report.ci_type = a.ci_type();
    if let Some(t) = a.ci_type() {
        report.expected_codim = expected_codim_ci(t);
    }
    report.wlp = wlp;
    Ok(report)
}

/// Full or middle locus of any graded object. Middle mode is taken on trust
/// here; [`locus_ideal`] checks its hypotheses for algebras.
pub fn locus_of_module<F: Field, M: GradedModule<F> + ?Sized>(m: &M, opts: &LocusOptions) -> Result<LocusReport<F>> {
    let start = Instant::now();
    let s = parameter_ring(m.field().clone());
    let (lo, hi) = m.degree_range().unwrap_or((0, -1));
    let hf = HilbertFunction::new(m.hilbert_values());
    let e = hf.socle_degree().map(|e| e as i32);
    let degrees: Vec<i32> = match opts.mode {
        LocusMode::FullIntersection => (lo..=hi - 2).collect(),
        LocusMode::MiddleOnly => match e {
            Some(e) if e >= 2 => vec![lo + middle_degree(e as u32)],
            _ => Vec::new(),
        },
    };
    let matrices = degrees
        .iter()
        .map(|&i| generic_conic_matrix(m, i))
        .collect::<Result<Vec<_>>>()?;
    let per_degree: Vec<DegreeIdeal<F>> = matrices
        .par_iter()
        .map(|b| DegreeIdeal {
            degree: b.degree(),
            shape: (b.rows(), b.cols()),
            ideal: minors_ideal(b),
        })
        .collect();

    let mut report = LocusReport {
        field: m.field().name(),
        ci_type: None,
        hilbert_function: hf.values().to_vec(),
        lowest_degree: lo,
        socle_degree: e,
        mode: opts.mode,
        per_degree,
        total: None,
        codim: None,
        degree: None,
        expected_codim: expected_codim_locus(&hf),
        wlp: None,
        slicing: None,
        seeds: vec![opts.seed],
        seconds: 0.0,
    };
    if let Some(slices) = opts.slicing {
        report.slicing = Some(codim_via_slicing_matrices(&matrices, opts.seed, slices));
    }
    if opts.exact {
        let total = total_ideal(&s, &report.per_degree);
        let dd = total.dimension_and_degree();
        let codim = clamp_codim(dd);
        report.codim = Some(codim);
        if (1..6).contains(&codim) {
            report.degree = Some(dd.degree);
        }
        report.total = Some(total);
    }
    report.seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Codimension in the five dimensional projective space of conics; the
/// empty locus reports 6.
pub fn clamp_codim(dd: DimensionDegree) -> i32 {
    if dd.dim <= 0 {
        6
    } else {
        dd.codim
    }
}

/// `\bigcap_i I_i`. When one of the ideals is contained in all others it is
/// the intersection; otherwise the ideals are intersected pairwise.
pub fn total_ideal<F: Field>(s: &Arc<PolyRing<F>>, parts: &[DegreeIdeal<F>]) -> Ideal<F> {
    if parts.is_empty() {
        return Ideal::unit(s);
    }
    parts.par_iter().for_each(|p| {
        p.ideal.groebner_basis();
    });
    let smallest = parts.iter().position(|cand| {
        parts
            .iter()
            .all(|other| std::ptr::eq(cand, other) || other.ideal.contains_ideal(&cand.ideal))
    });
    if let Some(k) = smallest {
        return parts[k].ideal.clone();
    }
    let mut acc = parts[0].ideal.clone();
    for p in &parts[1..] {
        if p.ideal.contains_ideal(&acc) {
            continue;
        }
        acc = if acc.contains_ideal(&p.ideal) {
            p.ideal.clone()
        } else {
            acc.intersection(&p.ideal)
        };
    }
    acc
}

/// Probabilistic codimension by restriction to random affine subspaces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlicingEstimate {
    pub codim: i32,
    /// For each tested `c`, how many slices met the locus.
    pub votes: Vec<(i32, usize, usize)>,
    pub confidence: String,
}

/// Restricts the locus to random affine `c`-planes of `S` for `c = 1..5`;
/// the cone over the locus meets a generic `c`-plane exactly when its
/// codimension is at most `c`. Each `c` is decided by majority over the
/// slices; any split vote is reported in the confidence note.
pub fn codim_via_slicing_matrices<F: Field>(mats: &[GenericConicMatrix<F>], seed: u64, slices: usize) -> SlicingEstimate {
    slicing(
        seed,
        slices,
        |ring, point, dirs| {
            // the locus is a union over degrees: the slice meets it as soon
            // as it meets one degree's locus
            mats.iter().any(|b| {
                let restricted = b.restrict(ring, point, dirs);
                if restricted.rows() == 0 || restricted.cols() == 0 {
                    return false;
                }
                let gens = maximal_minors(&restricted).into_iter().map(|m| m.value).collect();
                !Ideal::new(ring, gens).is_unit()
            })
        },
        mats.first().map(|b| b.params.field().clone()),
    )
}

/// Slicing estimate for an explicit homogeneous ideal of `S`.
pub fn codim_via_slicing<F: Field>(ideal: &Ideal<F>, seed: u64, slices: usize) -> SlicingEstimate {
    let field = ideal.ring().field().clone();
    let arity = ideal.ring().arity();
    slicing(seed, slices, |ring, point, dirs| {
        let images: Vec<Poly<F>> = (0..arity)
            .map(|k| {
                let mut terms = vec![(Monomial::ONE, point[k].clone())];
                for (j, d) in dirs.iter().enumerate() {
                    terms.push((Monomial::var_power(j, 1), d[k].clone()));
                }
                Poly::from_terms(ring, terms)
            })
            .collect();
        let gens = ideal.generators().iter().map(|g| g.substitute(ring, &images)).collect();
        !Ideal::new(ring, gens).is_unit()
    }, Some(field))
}

fn slicing<F: Field>(
    seed: u64,
    slices: usize,
    meets: impl Fn(&Arc<PolyRing<F>>, &[F::Elem], &[Vec<F::Elem>]) -> bool + Sync,
    field: Option<F>,
) -> SlicingEstimate {
    let slices = slices.max(1);
    let Some(field) = field else {
        return SlicingEstimate {
            codim: 6,
            votes: Vec::new(),
            confidence: "no degrees to test; the locus is empty".into(),
        };
    };
    let mut votes = Vec::new();
    let mut split = false;
    for c in 1..=5i32 {
        let names: Vec<String> = (1..=c).map(|j| format!("t{j}")).collect();
        let ring = PolyRing::new(field.clone(), &names, MonomialOrder::Grevlex).unwrap();
        let hits: usize = (0..slices)
            .into_par_iter()
            .map(|s| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((c as u64) << 32) ^ (s as u64).wrapping_mul(0x9E37_79B9));
                let point: Vec<F::Elem> = (0..6).map(|_| field.random(&mut rng)).collect();
                let dirs: Vec<Vec<F::Elem>> =
                    (0..c).map(|_| (0..6).map(|_| field.random(&mut rng)).collect()).collect();
                usize::from(meets(&ring, &point, &dirs))
            })
            .sum();
        votes.push((c, hits, slices));
        if hits != 0 && hits != slices {
            split = true;
        }
        if 2 * hits > slices {
            return SlicingEstimate {
                codim: c,
                confidence: note(split, slices),
                votes,
            };
        }
    }
    SlicingEstimate {
        codim: 6,
        confidence: note(split, slices),
        votes,
    }
}

fn note(split: bool, slices: usize) -> String {
    if split {
        format!("split vote among {slices} slices per codimension; treat as unreliable")
    } else {
        format!("unanimous over {slices} slices per codimension")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{PrimeField, Rationals};

    fn a_vars<F: Field>(s: &Arc<PolyRing<F>>) -> Vec<Poly<F>> {
        (0..6).map(|i| Poly::var(s, i)).collect()
    }

    fn entries<F: Field>(b: &GenericConicMatrix<F>) -> Vec<Vec<String>> {
        (0..b.rows())
            .map(|r| (0..b.cols()).map(|c| b.entry(r, c).to_string()).collect())
            .collect()
    }

    #[test]
    fn first_matrix_of_squares() {
        let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 2).unwrap());
        let b = generic_conic_matrix(&a, 0).unwrap();
        assert_eq!(entries(&b), vec![vec!["a2"], vec!["a3"], vec!["a5"]]);
        let i = minors_ideal(&b);
        let s = b.parameter_ring().clone();
        let v = a_vars(&s);
        assert!(i.equals(&Ideal::new(&s, vec![v[1].clone(), v[2].clone(), v[4].clone()])));
    }

    #[test]
    fn degree_one_matrix_with_a_long_socle() {
        let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 4).unwrap());
        let b = generic_conic_matrix(&a, 1).unwrap();
        let cols: Vec<Vec<String>> = (0..3)
            .map(|c| (0..4).map(|r| b.entry(r, c).to_string()).collect())
            .collect();
        assert_eq!(
            cols,
            vec![
                vec!["a5", "a6", "0", "0"],
                vec!["a3", "0", "a6", "0"],
                vec!["a2", "a3", "a5", "a6"],
            ]
        );
        let s = b.parameter_ring().clone();
        let v = a_vars(&s);
        let expected = Ideal::new(
            &s,
            vec![
                v[5].pow(3),
                &v[4] * &v[5].pow(2),
                &v[2] * &v[5].pow(2),
                &(&Poly::constant(&s, Rationals.from_i64(2)) * &(&(&v[2] * &v[4]) * &v[5])) - &(&v[1] * &v[5].pow(2)),
            ],
        );
        assert!(minors_ideal(&b).equals(&expected));
    }

    #[test]
    fn out_of_range_degrees() {
        let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 2).unwrap());
        assert!(matches!(generic_conic_matrix(&a, 7), Err(Error::DegreeOutOfRange(..))));
        let b = generic_conic_matrix(&a, 2).unwrap();
        assert_eq!((b.rows(), b.cols()), (0, 3));
        assert!(minors_ideal(&b).is_unit());
    }

    #[test]
    fn classifier_examples() {
        let t = |a, b, c| expected_codim_ci(CIType::new(a, b, c).unwrap());
        assert_eq!(t(2, 2, 3), 1);
        assert_eq!(t(2, 2, 4), 2);
        assert_eq!(t(2, 3, 3), 3);
        assert_eq!(t(2, 2, 6), 1);
        let h = |v: Vec<usize>| expected_codim_locus(&HilbertFunction::new(v));
        assert_eq!(h(vec![1, 3, 3, 1]), 3);
        assert_eq!(h(vec![1, 3, 4, 4, 3, 1]), 2);
        assert_eq!(h(vec![1, 3, 6, 3, 1]), 1);
        assert_eq!(h(vec![1, 3, 1]), 1);
        assert_eq!(h(vec![1, 1]), 6);
    }

    #[test]
    fn single_conics() {
        let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 4).unwrap());
        let r = a.ring().clone();
        let x = |i| Poly::var(&r, i);
        let v = is_lefschetz_conic(&a, &x(2).pow(2)).unwrap();
        assert!(v.lefschetz);
        let v = is_lefschetz_conic(&a, &(&x(0) * &x(1))).unwrap();
        assert!(!v.lefschetz);
        assert_eq!(v.failing_degree, Some(1));
        assert_eq!(is_lefschetz_conic(&a, &x(0)).unwrap_err(), Error::NotDegreeTwo(1));

        let sq = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 2).unwrap());
        let c = &(&(&x(0) * &x(1)) + &(&x(0) * &x(2))) + &(&x(1) * &x(2));
        assert!(is_lefschetz_conic(&sq, &c).unwrap().lefschetz);
    }

    #[test]
    fn lefschetz_certificates() {
        let a = QuotientAlgebra::monomial_ci(PrimeField::default(), CIType::new(2, 3, 4).unwrap());
        let w = wlp_check(&a, 5, 3);
        assert!(w.found);
        let s = slp_range2_check(&a, 5, 3);
        assert!(s.found);
        // re-verify the certificate
        let f = a.field();
        let coeffs: Vec<_> = w
            .linear_form
            .unwrap()
            .iter()
            .map(|c| f.from_i64(c.parse().unwrap()))
            .collect();
        let l = Poly::from_terms(
            a.ring(),
            coeffs.into_iter().enumerate().map(|(k, c)| (Monomial::var_power(k, 1), c)).collect(),
        );
        for i in 0..a.socle_degree() as i32 {
            assert!(a.multiplication_matrix(&l, i).unwrap().has_max_rank());
        }
        let k = crate::algebra::make_quotient(
            a.ring(),
            (0..3).map(|i| Poly::var(a.ring(), i)).collect(),
        )
        .unwrap();
        assert!(wlp_check(&k, 1, 1).found);
    }

    #[test]
    fn small_loci() {
        let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 2).unwrap());
        let rep = locus_ideal(&a, &LocusOptions::default()).unwrap();
        assert_eq!(rep.codim, Some(3));
        assert_eq!(rep.degree, Some(1));
        assert_eq!(rep.expected_codim, 3);

        let b = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 4).unwrap());
        let rep = locus_ideal(&b, &LocusOptions::default()).unwrap();
        assert_eq!(rep.codim, Some(1));
        let total = rep.total.unwrap();
        let s = total.ring().clone();
        assert!(total.radical_contains(&Poly::var(&s, 5)));
        assert!(!total.radical_contains(&Poly::var(&s, 4)));
    }

    #[test]
    fn middle_mode_requires_certificate() {
        let r = crate::algebra::ambient_ring(PrimeField::default());
        let x = |i| Poly::var(&r, i);
        // not Gorenstein: socle in degrees 1 and 2
        let a = crate::algebra::make_quotient(&r, vec![x(0).pow(2), &x(0) * &x(1), x(1).pow(3), x(2).pow(2), &x(0) * &x(2)]).unwrap();
        let opts = LocusOptions {
            mode: LocusMode::MiddleOnly,
            ..LocusOptions::default()
        };
        assert!(matches!(locus_ideal(&a, &opts), Err(Error::MiddleModeUnjustified(_))));
        let ci = QuotientAlgebra::monomial_ci(PrimeField::default(), CIType::new(2, 2, 3).unwrap());
        let rep = locus_ideal(&ci, &opts).unwrap();
        assert!(rep.wlp.unwrap().found);
        assert_eq!(rep.codim, Some(1));
    }

    #[test]
    fn slicing_on_coordinate_subspace() {
        let s = parameter_ring(PrimeField::default());
        let v = a_vars(&s);
        let i = Ideal::new(&s, vec![v[1].clone(), v[2].clone(), v[4].clone()]);
        let est = codim_via_slicing(&i, 3, 3);
        assert_eq!(est.codim, 3);
        assert_eq!(est.votes, vec![(1, 0, 3), (2, 0, 3), (3, 3, 3)]);
    }

    #[test]
    fn specialization_coherence() {
        let a = QuotientAlgebra::random_ci(PrimeField::default(), CIType::new(2, 3, 3).unwrap(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for i in 0..=a.socle_degree() as i32 - 2 {
            let b = generic_conic_matrix(&a, i).unwrap();
            for _ in 0..10 {
                let c: Vec<_> = (0..6).map(|_| a.field().random(&mut rng)).collect();
                let conic = conic_from_coefficients(a.ring(), &c);
                assert_eq!(b.specialize(&c), a.multiplication_map(&conic, 2, i).unwrap());
                // the same through the polynomial entries
                let via_entries = Matrix::from_rows(
                    a.field(),
                    (0..b.rows()).map(|r| (0..b.cols()).map(|k| b.entry(r, k).eval(&c)).collect()).collect(),
                );
                assert_eq!(via_entries, b.specialize(&c));
            }
        }
    }
}
