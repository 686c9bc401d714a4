mod common;

use std::collections::HashMap;

use common::{binom, exponents, homogeneous, poly, ring, sparse};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rephom_core::{
    fitting_ideal, hilbert_function, homology_all, ideal_contains, ideal_equals, ideal_gb,
    is_zero_module, koszul_complex, prune, FreeVector, HomologyOptions, ModulePresentation,
    PolyMatrix, Polynomial,
};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn ring_axioms(a in sparse(3, 4), b in sparse(3, 4), c in sparse(3, 4)) {
        let r = ring(&["x", "y", "z"]);
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &r.one(), a.clone());
        prop_assert_eq!(r.parse(&r.render(&a)).unwrap(), a);
    }

    #[test]
    fn normal_forms_are_idempotent(
        gens in prop::collection::vec(sparse(3, 3), 1..=3),
        f in sparse(3, 5),
    ) {
        let r = ring(&["x", "y", "z"]);
        let gens: Vec<Polynomial> = gens.iter().map(|g| poly(&r, g)).collect();
        let gb = ideal_gb(&gens, &r).unwrap();
        prop_assert!(gb.verify());
        let v = |p: &Polynomial| FreeVector::from_entries(vec![p.clone()]);
        let f = poly(&r, &f);
        let nf = gb.normal_form(&v(&f)).unwrap();
        prop_assert_eq!(gb.normal_form(&nf).unwrap(), nf.clone());
        prop_assert!(gb.contains(&v(&f).sub(&nf).unwrap()).unwrap());
        for g in &gens {
            prop_assert!(gb.normal_form(&v(g)).unwrap().is_zero());
        }
    }
}

type Dense = HashMap<Vec<u32>, BigRational>;

/// Sparse integer terms `(coefficient, exponents)`.
type Terms = Vec<(i64, Vec<u32>)>;

fn dense(terms: &[(i64, Vec<u32>)]) -> Dense {
    let mut out = Dense::new();
    for (c, e) in terms {
        *out.entry(e.clone()).or_insert_with(BigRational::zero) +=
            BigRational::from_integer((*c).into());
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn shift(p: &Dense, m: &[u32]) -> Dense {
    p.iter()
        .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
        .collect()
}

/// Rank of the rows, each a vector indexed by `basis`.
fn rank(rows: &[Dense], basis: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            basis
                .iter()
                .map(|e| r.get(e).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..basis.len() {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][col].clone();
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && !row[col].is_zero() {
                let f = row[col].clone() * inv.clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= p.clone() * f.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Membership of a homogeneous `f` of degree `d` in an ideal with homogeneous
/// generators: `f` lies in the span of all `m * g` of degree `d`.
fn oracle_contains(gens: &[(u32, Dense)], f: &Dense, d: u32) -> bool {
    let basis = exponents(2, d);
    let mut rows = Vec::new();
    for (dg, g) in gens {
        if *dg <= d {
            for m in exponents(2, d - dg) {
                rows.push(shift(g, &m));
            }
        }
    }
    let before = rank(&rows, &basis);
    rows.push(f.clone());
    rank(&rows, &basis) == before
}

fn membership_case() -> impl Strategy<Value = (Vec<(u32, Terms)>, u32, Terms)> {
    let gen = (1u32..=2).prop_flat_map(|d| (Just(d), homogeneous(2, d)));
    (prop::collection::vec(gen, 1..=3), 2u32..=6, prop::bool::ANY).prop_flat_map(
        |(gens, d, noise)| {
            let gens2 = gens.clone();
            let multipliers: Vec<_> = gens
                .iter()
                .map(|(dg, _)| homogeneous(2, d.saturating_sub(*dg)))
                .collect();
            let extra = if noise {
                homogeneous(2, d).boxed()
            } else {
                Just(Vec::new()).boxed()
            };
            (Just(gens2), Just(d), multipliers, extra).prop_map(|(gens, d, mults, extra)| {
                let mut f = extra;
                for ((dg, g), h) in gens.iter().zip(mults) {
                    if *dg > d {
                        continue;
                    }
                    for (c1, e1) in &h {
                        for (c2, e2) in g {
                            f.push((c1 * c2, e1.iter().zip(e2).map(|(a, b)| a + b).collect()));
                        }
                    }
                }
                (gens, d, f)
            })
        },
    )
}

proptest! {
    #![proptest_config(config(128))]

    #[test]
    fn membership_matches_linear_algebra((gens, d, f) in membership_case()) {
        let r = ring(&["x", "y"]);
        let polys: Vec<Polynomial> = gens.iter().map(|(_, g)| poly(&r, g)).collect();
        let oracle_gens: Vec<(u32, Dense)> = gens.iter().map(|(dg, g)| (*dg, dense(g))).collect();
        let expected = oracle_contains(&oracle_gens, &dense(&f), d);
        prop_assert_eq!(ideal_contains(&polys, &poly(&r, &f), &r).unwrap(), expected);
    }

    #[test]
    fn koszul_differentials_compose_to_zero(elements in prop::collection::vec(sparse(3, 3), 1..=4)) {
        let r = ring(&["x", "y", "z"]);
        let elements: Vec<Polynomial> = elements.iter().map(|e| poly(&r, e)).collect();
        let c = koszul_complex(&elements, &r).unwrap();
        prop_assert!(c.is_complex().unwrap());
        for p in 1..c.top() {
            let d = c.differential(p).unwrap().mul(c.differential(p + 1).unwrap()).unwrap();
            prop_assert!(d.is_zero());
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    /// Powers of distinct variables, scaled by units, form a regular sequence.
    #[test]
    fn regular_sequences_are_acyclic(
        picks in prop::sample::subsequence(vec![0usize, 1, 2, 3, 4], 1..=4),
        powers in prop::collection::vec(1u32..=2, 4),
        scales in prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 3]), 4),
    ) {
        let r = ring(&["a", "b", "c", "d", "e"]);
        let elements: Vec<Polynomial> = picks
            .iter()
            .zip(&powers)
            .zip(&scales)
            .map(|((&i, &k), &s)| &r.constant(s) * &r.var(i).pow(k))
            .collect();
        let c = koszul_complex(&elements, &r).unwrap();
        let report = homology_all(&c, &HomologyOptions::default()).unwrap();
        prop_assert!(!report.truncated);
        prop_assert!(!is_zero_module(&report.modules[0]).unwrap());
        for h in &report.modules[1..] {
            prop_assert!(is_zero_module(h).unwrap(), "H_{} nonzero", h.homological_degree());
        }
        // H_0 is the quotient by the sequence itself
        let h0 = &report.modules[0];
        prop_assert!(ideal_equals(h0.relations().row(0), &elements, &r).unwrap());
    }

    /// Hilbert series of the complex and of its homology have the same alternating sum.
    #[test]
    fn euler_characteristic(elements in prop::collection::vec((1u32..=2).prop_flat_map(|d| homogeneous(2, d).prop_map(move |t| (d, t))), 1..=3)) {
        let r = ring(&["x", "y"]);
        let polys: Vec<Polynomial> = elements.iter().map(|(_, t)| poly(&r, t)).collect();
        // a zero element carries degree 0
        let degs: Vec<u32> = elements
            .iter()
            .zip(&polys)
            .map(|((d, _), f)| if f.is_zero() { 0 } else { *d })
            .collect();
        let c = koszul_complex(&polys, &r).unwrap();
        let report = homology_all(&c, &HomologyOptions::default()).unwrap();
        let top = 6u32;
        let mut lhs = vec![0i64; top as usize + 1];
        for (p, h) in report.modules.iter().enumerate() {
            let hf = hilbert_function(h, top).unwrap();
            for (d, v) in hf.values.iter().enumerate() {
                lhs[d] += if p % 2 == 0 { *v as i64 } else { -(*v as i64) };
            }
        }
        let mut rhs = vec![0i64; top as usize + 1];
        for p in 0..=polys.len() {
            for s in rephom_core::homology::exterior_basis(polys.len(), p) {
                let shift: u32 = s.iter().map(|&i| degs[i]).sum();
                for d in shift..=top {
                    let free = binom(u64::from(d - shift) + 1, 1) as i64;
                    rhs[d as usize] += if p % 2 == 0 { free } else { -free };
                }
            }
        }
        prop_assert_eq!(lhs, rhs);
    }
}

/// A graded presentation over QQ[x, y]: generators in degree 0, column `j`
/// homogeneous of degree `cols[j].0`, degree-0 columns being scalars.
fn presentation_case() -> impl Strategy<Value = (usize, Vec<(u32, Vec<Terms>)>)> {
    (1usize..=3).prop_flat_map(|rows| {
        let col = (0u32..=2).prop_flat_map(move |d| {
            let entry = prop_oneof![
                1 => Just(Vec::new()),
                2 => homogeneous(2, d),
            ];
            (Just(d), prop::collection::vec(entry, rows))
        });
        (Just(rows), prop::collection::vec(col, 0..=3))
    })
}

fn build(rows: usize, cols: &[(u32, Vec<Terms>)]) -> ModulePresentation {
    let r = ring(&["x", "y"]);
    let columns: Vec<Vec<Polynomial>> = cols
        .iter()
        .map(|(_, entries)| entries.iter().map(|e| poly(&r, e)).collect())
        .collect();
    let m = PolyMatrix::from_columns(rows, &columns, r.nvars(), r.field()).unwrap();
    ModulePresentation::new(r, m, 0)
        .unwrap()
        .with_generator_degrees(vec![0; rows])
        .unwrap()
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn prune_preserves_invariants((rows, cols) in presentation_case()) {
        let p = build(rows, &cols);
        let q = prune(&p);
        let r = p.ring().clone();
        prop_assert!(q.generator_rank() <= p.generator_rank());
        for i in 0..=p.generator_rank() {
            let a = fitting_ideal(&p, i).unwrap();
            let b = fitting_ideal(&q, i).unwrap();
            prop_assert!(ideal_equals(&a, &b, &r).unwrap(), "Fitt_{}", i);
        }
        prop_assert_eq!(
            hilbert_function(&p, 5).unwrap().values,
            hilbert_function(&q, 5).unwrap().values
        );
        prop_assert_eq!(is_zero_module(&p).unwrap(), is_zero_module(&q).unwrap());
        prop_assert_eq!(prune(&q), q);
    }
}
