#![allow(dead_code)]

use proptest::prelude::*;
use rephom_core::{Field, Polynomial, RingSpec};

pub fn ring(names: &[&str]) -> RingSpec {
    RingSpec::polynomial_ring(Field::Rational, names).unwrap()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn exponents(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in exponents(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

pub fn monomial(r: &RingSpec, e: &[u32]) -> Polynomial {
    e.iter()
        .enumerate()
        .fold(r.one(), |acc, (i, &k)| &acc * &r.var(i).pow(k))
}

/// Sum of `c * x^e` over the pairs.
pub fn poly(r: &RingSpec, terms: &[(i64, Vec<u32>)]) -> Polynomial {
    terms.iter().fold(r.zero(), |acc, (c, e)| {
        &acc + &(&r.constant(*c) * &monomial(r, e))
    })
}

/// Coefficients for every monomial of degree `d` in `n` variables.
pub fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    let es = exponents(n, d);
    prop::collection::vec(-3i64..=3, es.len())
        .prop_map(move |cs| cs.into_iter().zip(es.clone()).collect())
}

/// Sparse, not necessarily homogeneous, exponents below 3.
pub fn sparse(n: usize, max_terms: usize) -> impl Strategy<Value = Vec<(i64, Vec<u32>)>> {
    prop::collection::vec(
        (-4i64..=4, prop::collection::vec(0u32..3, n)),
        0..=max_terms,
    )
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
