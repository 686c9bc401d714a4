//! Dense exponent vectors and the monomial orders used throughout.

use std::cmp::Ordering;

/// A monomial as a dense exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: 1,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Monomial {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    /// Total degree with all variables of weight one.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: Box<[u16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps: Box<[u16]> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            degree: other.degree - self.degree,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Degree of `lcm(self, other)` without building it.
    pub fn lcm_degree(&self, other: &Monomial) -> u32 {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .map(|(&a, &b)| a.max(b) as u32)
            .sum()
    }
}

/// Monomial order. Grevlex is the default everywhere.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    /// Compares monomials of equal length.
    ///
    /// Grevlex: higher total degree wins; on a tie the monomial for which the
    /// last nonzero entry of the exponent difference is negative is greater.
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
        }
    }
}

/// Checked comparison for callers that cannot guarantee equal lengths.
pub fn compare_monomials(
    a: &Monomial,
    b: &Monomial,
    order: MonomialOrder,
) -> crate::Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(crate::Error::DimensionMismatch(format!(
            "monomials of length {} and {}",
            a.nvars(),
            b.nvars()
        )));
    }
    Ok(order.compare(a, b))
}

/// Order on terms `m·e_i` of a free module.
///
/// Monomial first, with the smaller position winning ties. When `split` is
/// set, positions below it form a block that dominates every position at or
/// above it, which is the elimination order used for syzygies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub monomial: MonomialOrder,
    pub split: Option<usize>,
}

impl ModuleOrder {
    pub fn new(monomial: MonomialOrder) -> ModuleOrder {
        ModuleOrder {
            monomial,
            split: None,
        }
    }

    pub fn elimination(monomial: MonomialOrder, split: usize) -> ModuleOrder {
        ModuleOrder {
            monomial,
            split: Some(split),
        }
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, pa: usize, b: &Monomial, pb: usize) -> Ordering {
        if let Some(s) = self.split {
            let ba = pa < s;
            let bb = pb < s;
            if ba != bb {
                return if ba {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        self.monomial.compare(a, b).then_with(|| pb.cmp(&pa))
    }
}

/// All exponent vectors in `nvars` variables whose weighted degree is `degree`,
/// in descending lex order of exponents.
pub fn monomials_of_degree(weights: &[u32], degree: u64) -> Vec<Monomial> {
    fn rec(weights: &[u32], i: usize, left: u64, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial::from_exponents(cur.clone()));
            }
            return;
        }
        let w = weights[i] as u64;
        let max = left / w;
        for e in (0..=max).rev() {
            cur.push(e as u16);
            rec(weights, i + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if weights.is_empty() {
        if degree == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(
        weights,
        0,
        degree,
        &mut Vec::with_capacity(weights.len()),
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_degree_two_table() {
        // x^2 > xy > y^2 in k[x,y]
        let ord = MonomialOrder::Grevlex;
        let mut all = monomials_of_degree(&[1, 1], 2);
        all.sort_by(|a, b| ord.compare(b, a));
        assert_eq!(all, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn grevlex_differs_from_lex_in_three_variables() {
        // x z vs y^2: lex puts xz first, grevlex puts y^2 first
        let a = m(&[1, 0, 1]);
        let b = m(&[0, 2, 0]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn one_is_minimal_and_self_is_equal() {
        let one = Monomial::one(2);
        let x = Monomial::variable(2, 0);
        assert_eq!(
            compare_monomials(&one, &x, MonomialOrder::Grevlex).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_monomials(&x, &x, MonomialOrder::Grevlex).unwrap(),
            Ordering::Equal
        );
        assert!(compare_monomials(&x, &Monomial::one(3), MonomialOrder::Grevlex).is_err());
    }

    #[test]
    fn grevlex_is_multiplicative_exhaustively() {
        let mut mons = Vec::new();
        for d in 0..=3 {
            mons.extend(monomials_of_degree(&[1, 1, 1], d));
        }
        for ord in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            for a in &mons {
                for b in &mons {
                    let base = ord.compare(a, b);
                    for c in &mons {
                        assert_eq!(ord.compare(&a.mul(c), &b.mul(c)), base);
                    }
                }
                assert_ne!(ord.compare(a, &Monomial::one(3)), Ordering::Less);
            }
        }
    }

    #[test]
    fn grevlex_is_total_on_degree_three() {
        let mons = monomials_of_degree(&[1, 1, 1], 3);
        for (i, a) in mons.iter().enumerate() {
            for (j, b) in mons.iter().enumerate() {
                let o = MonomialOrder::Grevlex.compare(a, b);
                assert_eq!(o == Ordering::Equal, i == j);
                assert_eq!(o.reverse(), MonomialOrder::Grevlex.compare(b, a));
            }
        }
    }

    #[test]
    fn elimination_block_dominates() {
        let ord = ModuleOrder::elimination(MonomialOrder::Grevlex, 1);
        let big = m(&[5, 5]);
        let one = Monomial::one(2);
        assert_eq!(ord.compare(&one, 0, &big, 1), Ordering::Greater);
        let plain = ModuleOrder::new(MonomialOrder::Grevlex);
        assert_eq!(plain.compare(&one, 0, &big, 1), Ordering::Less);
        assert_eq!(plain.compare(&one, 0, &one, 1), Ordering::Greater);
    }

    #[test]
    fn weighted_enumeration_counts() {
        // binom(d+2, 2) monomials of degree d in three variables
        for d in 0..6u64 {
            assert_eq!(
                monomials_of_degree(&[1, 1, 1], d).len() as u64,
                (d + 1) * (d + 2) / 2
            );
        }
        // x of weight 2, y of weight 1: degree 3 has x y, y^3
        assert_eq!(monomials_of_degree(&[2, 1], 3).len(), 2);
    }
}
