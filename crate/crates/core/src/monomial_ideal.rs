//! Monomial ideals: minimal generators, Krull dimension and Hilbert series.
//!
//! The Hilbert series of `k[x_1..x_n]/M` is `N(t) / (1-t)^n`; the numerator
//! is computed with the pivot recursion `N(M) = N(M + p) + t^deg(p) N(M : p)`.

use crate::poly::Monomial;

/// Drops generators divisible by other generators; result is sorted by
/// degree, then by packed exponent.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted: Vec<Monomial> = gens.to_vec();
    sorted.sort_by_key(|m| (m.degree(), m.packed()));
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(sorted.len());
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Integer polynomial in `t`, coefficient `i` is the coefficient of `t^i`.
pub type IntPoly = Vec<i64>;

fn int_mul(a: &[i64], b: &[i64]) -> IntPoly {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn int_add_shifted(a: &mut IntPoly, b: &[i64], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

fn trim(mut p: IntPoly) -> IntPoly {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
    p
}

/// Numerator `N(t)` of the Hilbert series of `k[x]/(gens)` over `(1-t)^n`.
pub fn hilbert_numerator(gens: &[Monomial]) -> IntPoly {
    trim(numerator_rec(minimalize(gens)))
}

fn numerator_rec(gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return vec![1];
    }
    // pairwise coprime generators form a regular sequence
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = int_mul(&acc, &f);
        }
        return acc;
    }
    // pivot x_j^e taken from a generator that is not a pure power
    let mut counts = [0usize; crate::poly::MAX_VARS];
    for g in &gens {
        for (j, c) in counts.iter_mut().enumerate() {
            if g.exponent(j) > 0 {
                *c += 1;
            }
        }
    }
    let mixed: Vec<&Monomial> = gens.iter().filter(|g| g.support().count_ones() > 1).collect();
    let j = (0..crate::poly::MAX_VARS)
        .filter(|&j| mixed.iter().any(|g| g.exponent(j) > 0))
        .max_by_key(|&j| (counts[j], usize::MAX - j))
        .expect("a mixed generator exists");
    let mut exps: Vec<u32> = mixed.iter().map(|g| g.exponent(j)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[exps.len() / 2];
    let pivot = Monomial::var_power(j, e);

    let mut plus = gens.clone();
    plus.push(pivot);
    let plus = minimalize(&plus);

    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let ge = g.exponent(j);
            let drop = ge.min(e);
            Monomial::var_power(j, drop).quotient(g)
        })
        .collect();
    let colon = minimalize(&colon);

    let mut n = numerator_rec(plus);
    let c = numerator_rec(colon);
    int_add_shifted(&mut n, &c, e as usize);
    n
}

/// Krull dimension of `k[x_1..x_n]/(gens)`: the largest set of variables
/// containing the support of no generator. `-1` when a generator is `1`.
pub fn krull_dimension(arity: usize, gens: &[Monomial]) -> i32 {
    if gens.iter().any(|g| g.degree() == 0) {
        return -1;
    }
    let supports: Vec<u32> = gens.iter().map(|g| g.support()).collect();
    let mut best = 0;
    for subset in 0u32..(1 << arity) {
        let size = subset.count_ones() as i32;
        if size <= best {
            continue;
        }
        if supports.iter().all(|s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

/// Dimension and degree read off the Hilbert series `N(t)/(1-t)^n`:
/// the pole order at `t = 1` and the value of the reduced numerator there.
pub fn dimension_and_degree_from_numerator(arity: usize, numerator: &[i64]) -> (i32, i64) {
    let mut q: IntPoly = numerator.to_vec();
    if q.iter().all(|&c| c == 0) {
        return (-1, 0);
    }
    let mut divisions = 0;
    while q.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q = (1-t) r  =>  r_i = sum_{k<=i} q_k
        let mut r = Vec::with_capacity(q.len() - 1);
        let mut acc = 0i64;
        for &c in &q[..q.len() - 1] {
            acc += c;
            r.push(acc);
        }
        q = trim(r);
        divisions += 1;
    }
    (arity as i32 - divisions, q.iter().sum())
}

/// Number of standard monomials (monomials outside the ideal) per degree
/// `0..=max_degree`, read off the numerator.
pub fn hilbert_function_from_numerator(arity: usize, numerator: &[i64], max_degree: usize) -> Vec<i64> {
    // multiply by 1/(1-t)^n = sum C(k+n-1, n-1) t^k
    let mut series = vec![0i64; max_degree + 1];
    let binom = |k: usize| -> i64 {
        if arity == 0 {
            return if k == 0 { 1 } else { 0 };
        }
        let (n, r) = (k + arity - 1, arity - 1);
        let mut acc: i128 = 1;
        for i in 0..r {
            acc = acc * (n - i) as i128 / (i + 1) as i128;
        }
        acc as i64
    };
    for (i, c) in numerator.iter().enumerate() {
        if i > max_degree {
            break;
        }
        for (k, s) in series.iter_mut().enumerate().skip(i) {
            *s += c * binom(k - i);
        }
    }
    series
}
