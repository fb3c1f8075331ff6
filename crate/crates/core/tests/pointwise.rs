//! The locus ideal against direct rank computations: a conic fails the
//! Lefschetz condition exactly when every generator of the locus ideal
//! vanishes at its coefficient vector.

use conic_locus::algebra::{CIType, QuotientAlgebra};
use conic_locus::coeff::{Field, PrimeField, Rationals};
use conic_locus::gorenstein::{apolar_algebra, dual_ring, DualGenerator};
use conic_locus::groebner::Ideal;
use conic_locus::locus::{conic_from_coefficients, is_lefschetz_conic, locus_ideal, LocusOptions};
use conic_locus::parse::parse_poly;
use proptest::prelude::*;

fn fp() -> PrimeField {
    PrimeField::new(32003).unwrap()
}

fn vanishes<F: Field>(ideal: &Ideal<F>, point: &[F::Elem]) -> bool {
    let zero = ideal.ring().field().zero();
    ideal.generators().iter().all(|g| g.eval(point) == zero)
}

fn agrees<F: Field>(a: &QuotientAlgebra<F>, total: &Ideal<F>, point: &[F::Elem]) -> bool {
    let conic = conic_from_coefficients(a.ring(), point);
    let fails = !is_lefschetz_conic(a, &conic).unwrap().lefschetz;
    fails == vanishes(total, point)
}

#[test]
fn semi_example_points() {
    let a = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 4).unwrap());
    let r = locus_ideal(&a, &LocusOptions::default()).unwrap();
    let total = r.total.unwrap();
    let q = |v: [i64; 6]| v.map(|x| Rationals.from_i64(x)).to_vec();
    for p in [[0, 1, 0, 0, 0, 0], [5, 1, 2, 3, 4, 0], [1, 0, 0, 1, 0, 1], [0, 0, 0, 0, 0, 1], [2, 3, 4, 5, 6, 7]] {
        assert!(agrees(&a, &total, &q(p)), "{p:?}");
    }
    let on_locus = q([3, -1, 2, 7, 1, 0]);
    assert!(vanishes(&total, &on_locus));
}

#[test]
fn apolar_triple_product_matches_squares() {
    let dual = dual_ring(Rationals);
    let g = DualGenerator::new(parse_poly(&dual, "X1*X2*X3").unwrap()).unwrap();
    let a = apolar_algebra(&g).unwrap();
    let b = QuotientAlgebra::monomial_ci(Rationals, CIType::new(2, 2, 2).unwrap());
    let ra = locus_ideal(&a, &LocusOptions::default()).unwrap();
    let rb = locus_ideal(&b, &LocusOptions::default()).unwrap();
    assert!(ra.total.unwrap().equals(&rb.total.unwrap()));
    assert_eq!(ra.codim, Some(3));
}

fn leading<F: Field>(i: &Ideal<F>) -> Vec<String> {
    let gb = i.groebner_basis();
    gb.leading_monomials().iter().map(|m| i.ring().format_monomial(m)).collect()
}

#[test]
fn fields_agree_on_monomial_types() {
    for d in [[2, 2, 3], [2, 3, 3], [2, 2, 5], [3, 3, 3]] {
        let t = CIType::new(d[0], d[1], d[2]).unwrap();
        let q = locus_ideal(&QuotientAlgebra::monomial_ci(Rationals, t), &LocusOptions::default()).unwrap();
        let p = locus_ideal(&QuotientAlgebra::monomial_ci(fp(), t), &LocusOptions::default()).unwrap();
        assert_eq!(q.codim, p.codim, "{t}");
        assert_eq!(q.degree, p.degree, "{t}");
        assert_eq!(
            leading(q.total.as_ref().unwrap()),
            leading(p.total.as_ref().unwrap()),
            "{t}"
        );
    }
}

fn small_type() -> impl Strategy<Value = CIType> {
    prop_oneof![
        Just([2, 2, 2]),
        Just([2, 2, 3]),
        Just([2, 2, 4]),
        Just([2, 3, 3]),
        Just([2, 3, 4]),
    ]
    .prop_map(|d| CIType::new(d[0], d[1], d[2]).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn locus_matches_rank_tests(t in small_type(), seed in 1u64..50, monomial: bool,
                                coords in prop::collection::vec(-3i64..=3, 6),
                                mask in prop::collection::vec(any::<bool>(), 6)) {
        let a = if monomial {
            QuotientAlgebra::monomial_ci(fp(), t)
        } else {
            QuotientAlgebra::random_ci(fp(), t, seed)
        };
        let r = locus_ideal(&a, &LocusOptions::default()).unwrap();
        let total = r.total.unwrap();
        let point: Vec<u32> = coords
            .iter()
            .zip(&mask)
            .map(|(&c, &keep)| fp().from_i64(if keep { c } else { 0 }))
            .collect();
        prop_assert!(agrees(&a, &total, &point));
    }
}
