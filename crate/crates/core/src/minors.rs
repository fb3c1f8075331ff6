//! Maximal minors of matrices with polynomial entries.
//!
//! All maximal minors of an `r x c` matrix (`r >= c`) are produced together
//! by a Laplace expansion along the columns: after processing the first `j`
//! columns, the table holds the `j x j` minor on every `j`-subset of rows.
//! Each table entry is reused by every larger minor containing it, so the
//! whole family costs `sum_j C(r, j) (r - j)` polynomial products.
//!
//! The fraction-free Bareiss determinant is kept as an independent check on
//! square matrices.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::coeff::Field;
use crate::poly::Poly;

/// A dense matrix of polynomials sharing one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<F>>,
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_rows(rows: Vec<Vec<Poly<F>>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// An `rows x 0` or `0 x cols` matrix has no entries to carry a ring.
    pub fn empty(rows: usize, cols: usize) -> Self {
        assert!(rows == 0 || cols == 0);
        PolyMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly<F> {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Applies `f` to every entry.
    pub fn map<G: Field>(&self, f: impl Fn(&Poly<F>) -> Poly<G>) -> PolyMatrix<G> {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

/// A maximal minor together with the rows (or columns) it uses.
#[derive(Clone, Debug)]
pub struct Minor<F: Field> {
    pub lines: Vec<usize>,
    pub value: Poly<F>,
}

/// All maximal minors, indexed by the chosen subset of the longer side in
/// lexicographic order. Zero minors are kept. A matrix with a zero dimension
/// has the single empty minor `1`, represented by an empty list here.
pub fn maximal_minors<F: Field>(m: &PolyMatrix<F>) -> Vec<Minor<F>> {
    if m.rows == 0 || m.cols == 0 {
        return Vec::new();
    }
    let tall = if m.rows >= m.cols { m.clone() } else { m.transpose() };
    let (r, c) = (tall.rows, tall.cols);
    let ring = tall.get(0, 0).ring().clone();
    // level j: map from row bitmask of size j to the minor on those rows and
    // the first j columns
    let mut level: FxHashMap<u64, Poly<F>> = FxHashMap::default();
    level.insert(0, Poly::one(&ring));
    for j in 0..c {
        let mut keys: Vec<u64> = level.keys().copied().collect();
        keys.sort_unstable();
        let contributions: Vec<Vec<(u64, Poly<F>)>> = keys
            .par_iter()
            .map(|&s| {
                let base = &level[&s];
                let mut out = Vec::new();
                if base.is_zero() {
                    return out;
                }
                for row in 0..r {
                    if s >> row & 1 == 1 {
                        continue;
                    }
                    let e = tall.get(row, j);
                    if e.is_zero() {
                        continue;
                    }
                    let before = (s & ((1u64 << row) - 1)).count_ones() as usize;
                    // the new row sits at position `before` among the chosen
                    // rows, the new column at position j
                    let term = e * base;
                    let term = if (before + j) % 2 == 1 { -&term } else { term };
                    out.push((s | 1 << row, term));
                }
                out
            })
            .collect();
        let mut next: FxHashMap<u64, Poly<F>> = FxHashMap::default();
        for list in contributions {
            for (key, term) in list {
                match next.get_mut(&key) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(key, term);
                    }
                }
            }
        }
        level = next;
    }
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    combinations(r, c, &mut Vec::new(), 0, &mut subsets);
    subsets
        .into_iter()
        .map(|lines| {
            let key = lines.iter().fold(0u64, |k, &l| k | 1 << l);
            let value = level.get(&key).cloned().unwrap_or_else(|| Poly::zero(&ring));
            Minor { lines, value }
        })
        .collect()
}

fn combinations(n: usize, k: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        if n - i < k - cur.len() {
            break;
        }
        cur.push(i);
        combinations(n, k, cur, i + 1, out);
        cur.pop();
    }
}

/// Exact quotient `f / g` when `g` divides `f`, `None` otherwise.
pub fn divide_exact<F: Field>(f: &Poly<F>, g: &Poly<F>) -> Option<Poly<F>> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let field = f.field();
    let ring = f.ring();
    let (lm, lc) = (g.leading_monomial().unwrap(), g.leading_coeff().unwrap());
    let inv = field.inv(lc).expect("nonzero");
    let mut rem = f.clone();
    let mut quotient = Vec::new();
    while let Some(m) = rem.leading_monomial().copied() {
        if !lm.divides(&m) {
            return None;
        }
        let q = lm.quotient(&m);
        let c = field.mul(rem.leading_coeff().unwrap(), &inv);
        rem = &rem - &g.mul_term(&q, &c);
        quotient.push((q, c));
    }
    Some(Poly::from_terms(ring, quotient))
}

/// Determinant of a square matrix by fraction-free Bareiss elimination
/// with exact polynomial division.
pub fn bareiss_determinant<F: Field>(m: &PolyMatrix<F>) -> Option<Poly<F>> {
    assert_eq!(m.rows, m.cols, "square matrix required");
    let n = m.rows;
    if n == 0 {
        return None;
    }
    let ring = m.get(0, 0).ring().clone();
    let mut a: Vec<Vec<Poly<F>>> = (0..n).map(|r| (0..n).map(|c| m.get(r, c).clone()).collect()).collect();
    let mut prev = Poly::one(&ring);
    let mut sign = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = !sign;
                }
                None => return Some(Poly::zero(&ring)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = divide_exact(&num, &prev).expect("Bareiss quotients are exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Some(if sign { -&det } else { det })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{PrimeField, Rationals};
    use crate::poly::{MonomialOrder, PolyRing};
    use proptest::prelude::*;
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing<PrimeField>> {
        PolyRing::new(PrimeField::new(101).unwrap(), &["a1", "a2", "a3"], MonomialOrder::Grevlex).unwrap()
    }

    /// Leibniz expansion over all permutations.
    fn leibniz<F: Field>(m: &PolyMatrix<F>, rows: &[usize]) -> Poly<F> {
        let n = m.cols();
        let ring = m.get(0, 0).ring().clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = Poly::zero(&ring);
        permute(&mut perm, 0, &mut |p| {
            let mut inversions = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if p[i] > p[j] {
                        inversions += 1;
                    }
                }
            }
            let mut t = Poly::one(&ring);
            for (col, &k) in p.iter().enumerate() {
                t = &t * m.get(rows[k], col);
            }
            total = if inversions % 2 == 0 { &total + &t } else { &total - &t };
        });
        total
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn two_by_two_and_column() {
        let r = PolyRing::new(Rationals, &["a1", "a2", "a3", "a4"], MonomialOrder::Grevlex).unwrap();
        let v = |i| Poly::var(&r, i);
        let m = PolyMatrix::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]]);
        let minors = maximal_minors(&m);
        assert_eq!(minors.len(), 1);
        assert_eq!(minors[0].value.to_string(), "-a2*a3 + a1*a4");
        let col = PolyMatrix::from_rows(vec![vec![v(1)], vec![v(2)], vec![v(3)]]);
        let values: Vec<String> = maximal_minors(&col).iter().map(|m| m.value.to_string()).collect();
        assert_eq!(values, vec!["a2", "a3", "a4"]);
        assert!(maximal_minors(&PolyMatrix::<Rationals>::empty(3, 0)).is_empty());
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<(u32, u32, u32, u32)>>> {
        prop::collection::vec(prop::collection::vec((0u32..5, 0u32..5, 0u32..5, 0u32..101), cols), rows)
    }

    fn build(r: &Arc<PolyRing<PrimeField>>, raw: &[Vec<(u32, u32, u32, u32)>]) -> PolyMatrix<PrimeField> {
        // sparse linear forms: coefficients in {0..4} on a1, a2, a3 plus a
        // random constant scaled onto a1
        PolyMatrix::from_rows(
            raw.iter()
                .map(|row| {
                    row.iter()
                        .map(|&(p, q, s, k)| {
                            let f = r.field();
                            let c = |x: u32| Poly::constant(r, f.from_i64(x as i64));
                            let t = &(&(&c(p) * &Poly::var(r, 0)) + &(&c(q) * &Poly::var(r, 1))) + &(&c(s) * &Poly::var(r, 2));
                            if k % 3 == 0 {
                                Poly::zero(r)
                            } else {
                                t
                            }
                        })
                        .collect()
                })
                .collect(),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn minors_match_leibniz(raw in arb_matrix(5, 3)) {
            let r = ring();
            let m = build(&r, &raw);
            for minor in maximal_minors(&m) {
                prop_assert_eq!(&minor.value, &leibniz(&m, &minor.lines));
            }
            // wide matrices give the same family
            let t = maximal_minors(&m.transpose());
            let s = maximal_minors(&m);
            prop_assert_eq!(t.len(), s.len());
            for (a, b) in t.iter().zip(&s) {
                prop_assert_eq!(&a.value, &b.value);
            }
        }

        #[test]
        fn bareiss_matches_expansion(raw in arb_matrix(4, 4)) {
            let r = ring();
            let m = build(&r, &raw);
            let dp = maximal_minors(&m);
            prop_assert_eq!(dp.len(), 1);
            prop_assert_eq!(bareiss_determinant(&m).unwrap(), dp[0].value.clone());
        }
    }

    #[test]
    fn exact_division() {
        let r = ring();
        let v = |i| Poly::var(&r, i);
        let f = &(&v(0) + &v(1)) * &(&v(1) - &v(2));
        assert_eq!(divide_exact(&f, &(&v(1) - &v(2))), Some(&v(0) + &v(1)));
        assert_eq!(divide_exact(&f, &v(2)), None);
    }
}
