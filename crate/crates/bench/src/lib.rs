//! Fixed inputs shared by the benchmarks.

use rephom_core::{Field, Polynomial, RingSpec};

/// The cyclic-`n` ideal: elementary cyclic sums of degree `1..n` and
/// `x_1 ... x_n - 1`.
pub fn cyclic(n: usize, field: Field) -> (RingSpec, Vec<Polynomial>) {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let ring = RingSpec::polynomial_ring(field, &names).expect("valid names");
    let mut gens = Vec::with_capacity(n);
    for d in 1..n {
        let mut f = ring.zero();
        for start in 0..n {
            let mut term = ring.one();
            for k in 0..d {
                term = &term * &ring.var((start + k) % n);
            }
            f = &f + &term;
        }
        gens.push(f);
    }
    let prod = (0..n).fold(ring.one(), |acc, i| &acc * &ring.var(i));
    gens.push(&prod - &ring.one());
    (ring, gens)
}

/// Katsura-`n` in `n + 1` unknowns.
pub fn katsura(n: usize, field: Field) -> (RingSpec, Vec<Polynomial>) {
    let names: Vec<String> = (0..=n).map(|i| format!("u{i}")).collect();
    let ring = RingSpec::polynomial_ring(field, &names).expect("valid names");
    let u = |i: isize| -> Polynomial {
        let i = i.unsigned_abs();
        if i <= n {
            ring.var(i)
        } else {
            ring.zero()
        }
    };
    let m = n as isize;
    let mut gens = Vec::with_capacity(n + 1);
    let mut lin = ring.constant(-1);
    for i in -m..=m {
        lin = &lin + &u(i);
    }
    gens.push(lin);
    for k in 0..m {
        let mut f = ring.zero();
        for i in -m..=m {
            f = &f + &(&u(i) * &u(k - i));
        }
        gens.push(&f - &u(k));
    }
    (ring, gens)
}
