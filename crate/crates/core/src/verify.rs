//! Reproducible verification suites.
//!
//! Every check recomputes its instance from scratch with fixed seeds. The
//! instances of a suite run in parallel and the checks come back in a fixed
//! order, so two runs print identical tables apart from timings.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{random_form, CIType, QuotientAlgebra};
use crate::coeff::{Field, PrimeField, Rationals, DEFAULT_PRIME};
use crate::error::Result;
use crate::gorenstein::random_gorenstein;
use crate::graded::GradedModule;
use crate::groebner::Ideal;
use crate::locus::{
    codim_via_slicing_matrices, conic_from_coefficients, expected_codim_ci, expected_codim_locus,
    generic_conic_matrix, locus_ideal, locus_of_module, middle_degree, parameter_ring, slp_range2_check,
    wlp_check, LocusOptions, LocusReport,
};
use crate::module::ModulePresentation;
use crate::parse::parse_poly_list;
use crate::poly::Poly;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    GoldenExamples,
    TheoremMainCi,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 3] = [Suite::GoldenExamples, Suite::TheoremMainCi, Suite::Properties];
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::GoldenExamples => "paper-examples",
            Suite::TheoremMainCi => "theorem-main-ci",
            Suite::Properties => "properties",
        })
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.to_string() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

pub fn run_suite(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::GoldenExamples => golden_examples(),
        Suite::TheoremMainCi => theorem_main_ci(),
        Suite::Properties => properties(),
    }
}

/// Renders checks as an aligned pass/fail table.
pub fn format_table(checks: &[Check]) -> String {
    let width = checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
    let mut out = String::new();
    for c in checks {
        out.push_str(&format!(
            "{} {:width$}  {:>8.2}s  {}: {}\n",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.seconds,
            c.name,
            c.detail,
        ));
    }
    out
}

pub fn fp() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME as u64).expect("default prime")
}

fn ci(d: [u32; 3]) -> CIType {
    CIType::new(d[0], d[1], d[2]).expect("valid type")
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

type Job = Box<dyn Fn() -> (bool, String) + Send + Sync>;

struct Task {
    id: String,
    name: String,
    limit: Option<f64>,
    job: Job,
}

fn task(id: &str, name: &str, limit: Option<f64>, job: impl Fn() -> (bool, String) + Send + Sync + 'static) -> Task {
    Task {
        id: id.to_string(),
        name: name.to_string(),
        limit,
        job: Box::new(job),
    }
}

fn run_tasks(tasks: Vec<Task>) -> Vec<Check> {
    tasks
        .into_par_iter()
        .map(|t| {
            let ((mut passed, mut detail), seconds) = timed(|| (t.job)());
            if let Some(limit) = t.limit {
                if seconds > limit {
                    passed = false;
                    detail.push_str(&format!("; exceeded time limit of {limit} s"));
                }
            }
            Check {
                id: t.id,
                name: t.name,
                passed,
                detail,
                seconds,
            }
        })
        .collect()
}

fn failed(e: impl fmt::Display) -> (bool, String) {
    (false, format!("error: {e}"))
}

fn param_ideal<F: Field>(field: F, text: &str) -> Ideal<F> {
    let s = parameter_ring(field);
    Ideal::new(&s, parse_poly_list(&s, text).expect("well-formed generators"))
}

fn full_locus<F: Field>(a: &QuotientAlgebra<F>) -> Result<LocusReport<F>> {
    locus_ideal(a, &LocusOptions::default())
}

fn total<F: Field>(r: &LocusReport<F>) -> &Ideal<F> {
    r.total.as_ref().expect("exact path")
}

fn golden_equality<F: Field>(field: F, degrees: [u32; 3], expected: &str, codim: i32) -> (bool, String) {
    let a = QuotientAlgebra::monomial_ci(field.clone(), ci(degrees));
    let r = match full_locus(&a) {
        Ok(r) => r,
        Err(e) => return failed(e),
    };
    let want = param_ideal(field, expected);
    let equal = total(&r).equals(&want);
    let ok = equal && r.codim == Some(codim);
    (ok, format!("ideal equality {equal}, codim {:?} (want {codim})", r.codim))
}

fn golden_semi<F: Field>(field: F) -> (bool, String) {
    let (ok, mut detail) =
        golden_equality(field.clone(), [2, 2, 4], "a6^3, a5*a6^2, a3*a6^2, 2*a3*a5*a6 - a2*a6^2", 1);
    let a = QuotientAlgebra::monomial_ci(field.clone(), ci([2, 2, 4]));
    let r = full_locus(&a).expect("monomial input");
    let s = parameter_ring(field);
    let var = |k: usize| Poly::var(&s, k);
    let a6 = total(&r).radical_contains(&var(5));
    let a5 = total(&r).radical_contains(&var(4));
    detail.push_str(&format!(", a6 in radical {a6}, a5 in radical {a5}"));
    (ok && a6 && !a5, detail)
}

fn monomial_codim<F: Field>(field: F, degrees: [u32; 3], want: i32) -> (bool, String) {
    let a = QuotientAlgebra::monomial_ci(field, ci(degrees));
    match full_locus(&a) {
        Ok(r) => (r.codim == Some(want), format!("codim {:?} (want {want})", r.codim)),
        Err(e) => failed(e),
    }
}

fn semi_family<F: Field>(field: F, degrees: [u32; 3]) -> (bool, String) {
    let a = QuotientAlgebra::monomial_ci(field, ci(degrees));
    match full_locus(&a) {
        Ok(r) => {
            let expected = expected_codim_ci(ci(degrees));
            (
                r.codim == Some(1) && r.expected_codim == 2 && expected == 2,
                format!("codim {:?}, expected codim {}", r.codim, r.expected_codim),
            )
        }
        Err(e) => failed(e),
    }
}

fn hypersurface_degree<F: Field>(a: &QuotientAlgebra<F>) -> (bool, String) {
    let e = a.socle_degree();
    let h = a.hilbert_function().get(middle_degree(e) as i64) as i64;
    match full_locus(a) {
        Ok(r) => (
            r.codim == Some(1) && r.degree == Some(h),
            format!("codim {:?}, degree {:?} (want codim 1, degree {h})", r.codim, r.degree),
        ),
        Err(e) => failed(e),
    }
}

pub fn golden_examples() -> Vec<Check> {
    let mut tasks = vec![
        task("1a-Q", "(2,2,2) locus over Q is (a2,a3,a5)", Some(1.0), || {
            golden_equality(Rationals, [2, 2, 2], "a2, a3, a5", 3)
        }),
        task("1a-Fp", "(2,2,2) locus over F_32003 is (a2,a3,a5)", Some(1.0), || {
            golden_equality(fp(), [2, 2, 2], "a2, a3, a5", 3)
        }),
        task("1b-Q", "(2,2,4) locus over Q, radical (a6)", Some(5.0), || golden_semi(Rationals)),
        task("1b-Fp", "(2,2,4) locus over F_32003, radical (a6)", Some(5.0), || golden_semi(fp())),
        task("1c-Q", "(3,3,4) locus over Q has codim 2", Some(120.0), || {
            monomial_codim(Rationals, [3, 3, 4], 2)
        }),
        task("1c-Fp", "(3,3,4) locus over F_32003 has codim 2", Some(120.0), || {
            monomial_codim(fp(), [3, 3, 4], 2)
        }),
        task("1d-exact-Q", "(4,4,6) exact codim over Q is 1", Some(900.0), || {
            monomial_codim(Rationals, [4, 4, 6], 1)
        }),
        task("1d-exact-Fp", "(4,4,6) exact codim over F_32003 is 1", Some(900.0), || {
            monomial_codim(fp(), [4, 4, 6], 1)
        }),
        task("1d-slicing", "(4,4,6) slicing codim over F_32003 is 1", Some(60.0), || {
            let a = QuotientAlgebra::monomial_ci(fp(), ci([4, 4, 6]));
            let opts = LocusOptions {
                slicing: Some(3),
                exact: false,
                ..LocusOptions::default()
            };
            match locus_ideal(&a, &opts) {
                Ok(r) => {
                    let s = r.slicing.expect("slicing requested");
                    (s.codim == 1, format!("slicing codim {} ({})", s.codim, s.confidence))
                }
                Err(e) => failed(e),
            }
        }),
    ];
    for d in [[2, 2, 4], [2, 3, 5], [3, 3, 6]] {
        let t = ci(d);
        tasks.push(task(&format!("1e-{t}-Q"), &format!("{t} over Q: codim 1, expected 2"), None, move || {
            semi_family(Rationals, d)
        }));
        tasks.push(task(
            &format!("1e-{t}-Fp"),
            &format!("{t} over F_32003: codim 1, expected 2"),
            None,
            move || semi_family(fp(), d),
        ));
    }
    tasks.push(task("3-ci", "random CI (2,2,3): hypersurface of degree h_1 = 3", None, || {
        hypersurface_degree(&QuotientAlgebra::random_ci(fp(), ci([2, 2, 3]), 1))
    }));
    tasks.push(task("3-gorenstein", "random Gorenstein e=4: hypersurface of degree h_1 = 3", None, || {
        match random_gorenstein(fp(), 4, 1) {
            Ok(a) => hypersurface_degree(&a),
            Err(e) => failed(e),
        }
    }));
    run_tasks(tasks)
}

/// Types and classifier values of the main complete intersection theorem
/// at desk scale.
pub const MAIN_CI_TABLE: [([u32; 3], i32); 6] = [
    ([2, 2, 3], 1),
    ([2, 2, 6], 1),
    ([2, 2, 4], 2),
    ([2, 3, 5], 2),
    ([2, 3, 3], 3),
    ([3, 3, 4], 3),
];

pub const MAIN_CI_SEEDS: [u64; 3] = [1, 2, 3];

pub fn theorem_main_ci() -> Vec<Check> {
    let jobs: Vec<([u32; 3], i32, u64)> = MAIN_CI_TABLE
        .iter()
        .flat_map(|&(d, want)| MAIN_CI_SEEDS.iter().map(move |&s| (d, want, s)))
        .collect();
    let results: Vec<(Option<i32>, String, f64)> = jobs
        .par_iter()
        .map(|&(d, _, seed)| {
            let (r, secs) = timed(|| full_locus(&QuotientAlgebra::random_ci(fp(), ci(d), seed)));
            match r {
                Ok(r) => (r.codim, format!("codim {:?}, degree {:?}", r.codim, r.degree), secs),
                Err(e) => (None, format!("error: {e}"), secs),
            }
        })
        .collect();

    let mut checks = Vec::new();
    for (k, &(d, want)) in MAIN_CI_TABLE.iter().enumerate() {
        let t = ci(d);
        let slice = &results[3 * k..3 * k + 3];
        for (j, (codim, detail, secs)) in slice.iter().enumerate() {
            let within = *secs < 180.0;
            checks.push(Check {
                id: format!("2-{t}-seed{}", MAIN_CI_SEEDS[j]),
                name: format!("random CI {t} has codim {want}"),
                passed: *codim == Some(want) && expected_codim_ci(t) == want && within,
                detail: if within { detail.clone() } else { format!("{detail}; exceeded 180 s") },
                seconds: *secs,
            });
        }
        let codims: Vec<Option<i32>> = slice.iter().map(|r| r.0).collect();
        checks.push(Check {
            id: format!("2-{t}-seeds"),
            name: format!("random CI {t}: seeds agree"),
            passed: codims.iter().all(|c| *c == codims[0]),
            detail: format!("codims {codims:?}"),
            seconds: 0.0,
        });
    }
    checks
}

/// Every complete intersection type with all degrees at least two and socle
/// degree at most `e`.
pub fn ci_types_up_to(e: u32) -> Vec<CIType> {
    let mut out = Vec::new();
    for s in 0..=e {
        let sum = s + 3;
        for d1 in 2..=sum {
            for d2 in d1..=sum {
                if d1 + d2 + d2 > sum {
                    break;
                }
                let d3 = sum - d1 - d2;
                out.push(ci([d1, d2, d3]));
            }
        }
    }
    out
}

fn aggregate(id: &str, name: &str, results: Vec<(String, bool, String)>, seconds: f64) -> Check {
    let total = results.len();
    let bad: Vec<String> = results
        .iter()
        .filter(|r| !r.1)
        .map(|r| format!("{} ({})", r.0, r.2))
        .collect();
    Check {
        id: id.to_string(),
        name: name.to_string(),
        passed: bad.is_empty() && total > 0,
        detail: if bad.is_empty() {
            format!("{total}/{total} instances")
        } else {
            format!("{}/{total} instances; failing: {}", total - bad.len(), bad.join(", "))
        },
        seconds,
    }
}

fn per_degree<F: Field>(r: &LocusReport<F>, i: i32) -> Option<&Ideal<F>> {
    r.per_degree.iter().find(|d| d.degree == i).map(|d| &d.ideal)
}

fn duality<F: Field>(r: &LocusReport<F>, e: i32) -> (bool, String) {
    for d in &r.per_degree {
        let j = e - 2 - d.degree;
        match per_degree(r, j) {
            Some(other) if other.equals(&d.ideal) => {}
            _ => return (false, format!("I_{} differs from I_{j}", d.degree)),
        }
    }
    (true, format!("{} degrees", r.per_degree.len()))
}

/// Containments between minor ideals two degrees apart, in both the
/// increasing and the decreasing direction.
fn containments<F: Field>(a: &QuotientAlgebra<F>, r: &LocusReport<F>) -> (bool, String) {
    let h = |i: i32| a.hilbert_function().get(i as i64);
    let mut tested = 0;
    for d in &r.per_degree {
        let i = d.degree;
        let Some(up) = per_degree(r, i + 2) else { continue };
        if h(i) <= h(i + 2) && h(i + 2) <= h(i + 4) && !a.has_socle_in_degree(i) && !a.has_socle_in_degree(i + 1) {
            tested += 1;
            if !d.ideal.contains_ideal(up) {
                return (false, format!("I_{} not contained in I_{i}", i + 2));
            }
        }
        if h(i) >= h(i + 2) && h(i + 2) >= h(i + 4) {
            tested += 1;
            if !up.contains_ideal(&d.ideal) {
                return (false, format!("I_{i} not contained in I_{}", i + 2));
            }
        }
    }
    (true, format!("{tested} containments"))
}

fn middle_equality<F: Field>(a: &QuotientAlgebra<F>, r: &LocusReport<F>) -> (bool, String) {
    let cert = wlp_check(a, 1, 3);
    if !cert.found {
        return (false, "no weak Lefschetz element".into());
    }
    let m = middle_degree(a.socle_degree());
    match per_degree(r, m) {
        Some(mid) => (total(r).equals(mid), format!("middle degree {m}")),
        None if r.per_degree.is_empty() => (total(r).is_unit(), "no degrees".into()),
        None => (false, format!("middle degree {m} missing")),
    }
}

fn specialization_coherence<F: Field>(a: &QuotientAlgebra<F>, seed: u64, samples: usize) -> (bool, String) {
    let field = a.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = a.degree_range().unwrap_or((0, -1));
    let mut compared = 0;
    for i in lo..=hi - 2 {
        let b = match generic_conic_matrix(a, i) {
            Ok(b) => b,
            Err(e) => return failed(e),
        };
        for _ in 0..samples {
            let c: Vec<F::Elem> = (0..6).map(|_| field.random(&mut rng)).collect();
            let conic = conic_from_coefficients(a.ring(), &c);
            match a.multiplication_map(&conic, 2, i) {
                Ok(m) if m == b.specialize(&c) => compared += 1,
                Ok(_) => return (false, format!("mismatch in degree {i}")),
                Err(e) => return failed(e),
            }
        }
    }
    (true, format!("{compared} matrices"))
}

fn module_consistency<F: Field>(a: &QuotientAlgebra<F>, seed: u64) -> (bool, String) {
    let gens: Vec<Poly<F>> = a.ideal().generators().to_vec();
    let Ok(gens) = <[Poly<F>; 3]>::try_from(gens) else {
        return (false, "ideal does not have three generators".into());
    };
    let m = match ModulePresentation::from_complete_intersection(a.ring(), gens) {
        Ok(m) => m,
        Err(e) => return failed(e),
    };
    if m.hilbert_values() != a.hilbert_values() {
        return (false, format!("Hilbert functions {:?} and {:?}", m.hilbert_values(), a.hilbert_values()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = a.degree_range().unwrap_or((0, -1));
    let mut compared = 0;
    for d in 1..=3u32 {
        for _ in 0..4 {
            let f = random_form(a.ring(), d, &mut rng);
            for i in lo..=hi - d as i32 {
                let (x, y) = match (a.multiplication_matrix(&f, i), m.multiplication_matrix(&f, i)) {
                    (Ok(x), Ok(y)) => (x, y),
                    (Err(e), _) | (_, Err(e)) => return failed(e),
                };
                if x.rank() != y.rank() {
                    return (false, format!("rank differs in degree {i} for a form of degree {d}"));
                }
                compared += 1;
            }
        }
    }
    let opts = LocusOptions::default();
    match (full_locus(a), locus_of_module(&m, &opts)) {
        (Ok(x), Ok(y)) => {
            let same = x.per_degree.len() == y.per_degree.len()
                && x.per_degree.iter().zip(&y.per_degree).all(|(p, q)| p.ideal.equals(&q.ideal));
            (same, format!("hf equal, {compared} ranks equal, locus ideals equal {same}"))
        }
        (Err(e), _) | (_, Err(e)) => failed(e),
    }
}

struct Computed {
    label: String,
    codim: Option<i32>,
    expected_locus: i32,
    slicing: Option<i32>,
    slp2: bool,
}

fn computed_instance(label: String, a: &QuotientAlgebra<PrimeField>, seed: u64) -> Result<Computed> {
    let r = full_locus(a)?;
    let (lo, hi) = a.degree_range().unwrap_or((0, -1));
    let mats = (lo..=hi - 2).map(|i| generic_conic_matrix(a, i)).collect::<Result<Vec<_>>>()?;
    let s = codim_via_slicing_matrices(&mats, seed, 3);
    Ok(Computed {
        label,
        codim: r.codim,
        expected_locus: expected_codim_locus(a.hilbert_function()),
        slicing: Some(s.codim),
        slp2: slp_range2_check(a, seed, 3).found,
    })
}

/// Monomial complete intersection results over one field, for the
/// membership based properties.
fn monomial_properties<F: Field>(field: F, max_e: u32) -> Vec<[(String, bool, String); 4]> {
    ci_types_up_to(max_e)
        .par_iter()
        .map(|&t| {
            let a = QuotientAlgebra::monomial_ci(field.clone(), t);
            let label = format!("{t} over {}", field.name());
            let r = match full_locus(&a) {
                Ok(r) => r,
                Err(e) => {
                    let f = (label.clone(), false, e.to_string());
                    return [f.clone(), f.clone(), f.clone(), f];
                }
            };
            let e = a.socle_degree() as i32;
            let (d_ok, d_msg) = duality(&r, e);
            let (c_ok, c_msg) = containments(&a, &r);
            let (m_ok, m_msg) = middle_equality(&a, &r);
            let expected = expected_codim_locus(a.hilbert_function()) >= r.codim.unwrap_or(6);
            [
                (label.clone(), d_ok, d_msg),
                (label.clone(), c_ok, c_msg),
                (label.clone(), m_ok, m_msg),
                (label, expected, format!("codim {:?}", r.codim)),
            ]
        })
        .collect()
}

type Builder = Arc<dyn Fn() -> QuotientAlgebra<PrimeField> + Send + Sync>;

pub fn properties() -> Vec<Check> {
    let mut checks = Vec::new();

    // Random complete intersections with socle degree at most nine.
    let random: Vec<(CIType, u64)> = ci_types_up_to(9).into_iter().zip(1u64..).collect();
    let (lef, secs) = timed(|| {
        random
            .par_iter()
            .map(|&(t, seed)| {
                let a = QuotientAlgebra::random_ci(fp(), t, seed);
                let w = wlp_check(&a, seed, 3);
                let s = slp_range2_check(&a, seed, 3);
                let label = format!("{t} seed {seed}");
                (
                    (label.clone(), w.found, format!("{} trials", w.trials_used)),
                    (label.clone(), s.found, format!("{} trials", s.trials_used)),
                    {
                        let (ok, msg) = specialization_coherence(&a, seed, 100);
                        (label, ok, msg)
                    },
                )
            })
            .collect::<Vec<_>>()
    });
    let (w, rest): (Vec<_>, Vec<_>) = lef.into_iter().map(|(a, b, c)| (a, (b, c))).unzip();
    let (s, c): (Vec<_>, Vec<_>) = rest.into_iter().unzip();
    checks.push(aggregate("4-wlp", "WLP certificate within 3 trials, random CIs e <= 9", w, secs));
    checks.push(aggregate("4-slp2", "SLP range 2 certificate within 3 trials, same CIs", s, 0.0));
    checks.push(aggregate("4-specialize", "B_i specializes to the conic multiplication, 100 conics", c, 0.0));

    // Membership properties on monomial complete intersections.
    let (mono, secs) = timed(|| {
        let mut v = monomial_properties(Rationals, 7);
        v.extend(monomial_properties(fp(), 7));
        v
    });
    let column = |k: usize| mono.iter().map(|r| r[k].clone()).collect::<Vec<_>>();
    checks.push(aggregate("4-duality", "I_i equals I_(e-2-i) on monomial CIs e <= 7", column(0), secs));
    checks.push(aggregate("4-containment", "minor ideal containments on monomial CIs e <= 7", column(1), 0.0));
    checks.push(aggregate("4-middle", "full locus equals the middle degree ideal, e <= 7", column(2), 0.0));

    // Instances of the golden examples and the main theorem table.
    let mut instances: Vec<(String, Builder)> = Vec::new();
    for d in [[2, 2, 2], [2, 2, 4], [3, 3, 4], [4, 4, 6], [2, 3, 5], [3, 3, 6]] {
        instances.push((
            format!("monomial {}", ci(d)),
            Arc::new(move || QuotientAlgebra::monomial_ci(fp(), ci(d))),
        ));
    }
    for (d, _) in MAIN_CI_TABLE {
        for seed in MAIN_CI_SEEDS {
            instances.push((
                format!("random {} seed {seed}", ci(d)),
                Arc::new(move || QuotientAlgebra::random_ci(fp(), ci(d), seed)),
            ));
        }
    }
    let (computed, secs) = timed(|| {
        instances
            .par_iter()
            .map(|(label, build)| computed_instance(label.clone(), &build(), 1))
            .collect::<Vec<_>>()
    });
    let mut slicing = Vec::new();
    let mut expected = column(3);
    let mut lc = Vec::new();
    for (r, (label, _)) in computed.iter().zip(&instances) {
        match r {
            Ok(c) => {
                slicing.push((
                    c.label.clone(),
                    c.slicing == c.codim,
                    format!("slicing {:?}, exact {:?}", c.slicing, c.codim),
                ));
                expected.push((
                    c.label.clone(),
                    c.codim.is_some_and(|x| c.expected_locus >= x),
                    format!("expected {}, codim {:?}", c.expected_locus, c.codim),
                ));
                lc.push((c.label.clone(), !c.slp2 || c.codim.is_some_and(|x| x >= 1), format!("codim {:?}", c.codim)));
            }
            Err(e) => {
                slicing.push((label.clone(), false, e.to_string()));
                expected.push((label.clone(), false, e.to_string()));
                lc.push((label.clone(), false, e.to_string()));
            }
        }
    }
    checks.push(aggregate("4-slicing", "slicing codim equals exact codim", slicing, secs));
    checks.push(aggregate("4-expected", "expected codim bounds the computed codim", expected, 0.0));
    checks.push(aggregate("4-lefschetz-conic", "codim at least 1 when an SLP2 element exists", lc, 0.0));

    // Module presentations of complete intersections.
    let mut module_tasks = Vec::new();
    for d in [[2, 2, 2], [2, 2, 4], [2, 3, 3]] {
        let t = ci(d);
        module_tasks.push(task(
            &format!("5-{t}-monomial-Q"),
            &format!("module presentation of monomial {t} over Q"),
            None,
            move || module_consistency(&QuotientAlgebra::monomial_ci(Rationals, t), 1),
        ));
        module_tasks.push(task(
            &format!("5-{t}-monomial-Fp"),
            &format!("module presentation of monomial {t} over F_32003"),
            None,
            move || module_consistency(&QuotientAlgebra::monomial_ci(fp(), t), 1),
        ));
        module_tasks.push(task(
            &format!("5-{t}-random-Fp"),
            &format!("module presentation of random {t} over F_32003"),
            None,
            move || module_consistency(&QuotientAlgebra::random_ci(fp(), t, 1), 1),
        ));
    }
    checks.extend(run_tasks(module_tasks));
    checks
}
