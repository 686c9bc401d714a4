use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gb::RelationReducer;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// A bounded chain complex of free modules `F_top -> ... -> F_1 -> F_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    ring: RingSpec,
    ranks: Vec<usize>,
    differentials: Vec<PolyMatrix>,
    basis_degrees: Option<Vec<Vec<i64>>>,
}

impl ChainComplex {
    /// `differentials[p - 1]` is `d_p: F_p -> F_{p-1}`; `rank_0` fixes `F_0` when
    /// there are no differentials.
    pub fn new(
        ring: RingSpec,
        rank_0: usize,
        differentials: Vec<PolyMatrix>,
    ) -> Result<ChainComplex> {
        let mut ranks = vec![rank_0];
        for (k, d) in differentials.iter().enumerate() {
            if d.nvars() != ring.nvars() || d.field() != ring.field() {
                return Err(Error::RingMismatch);
            }
            if d.rows() != ranks[k] {
                return Err(Error::DimensionMismatch(format!(
                    "d_{} has {} rows but F_{} has rank {}",
                    k + 1,
                    d.rows(),
                    k,
                    ranks[k]
                )));
            }
            ranks.push(d.cols());
        }
        Ok(ChainComplex {
            ring,
            ranks,
            differentials,
            basis_degrees: None,
        })
    }

    /// Attaches internal degrees of the basis elements of each `F_p`.
    pub fn with_basis_degrees(mut self, degrees: Vec<Vec<i64>>) -> Result<ChainComplex> {
        if degrees.len() != self.ranks.len()
            || degrees.iter().zip(&self.ranks).any(|(d, r)| d.len() != *r)
        {
            return Err(Error::DimensionMismatch(
                "basis degrees do not match ranks".into(),
            ));
        }
        self.basis_degrees = Some(degrees);
        Ok(self)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, p: usize) -> usize {
        self.ranks.get(p).copied().unwrap_or(0)
    }

    /// Highest index with a (possibly zero) module.
    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_p` for `1 <= p <= top`.
    pub fn differential(&self, p: usize) -> Option<&PolyMatrix> {
        p.checked_sub(1).and_then(|k| self.differentials.get(k))
    }

    pub fn basis_degrees(&self, p: usize) -> Option<&[i64]> {
        self.basis_degrees
            .as_ref()
            .and_then(|d| d.get(p))
            .map(Vec::as_slice)
    }

    /// Whether every `d_p · d_{p+1}` vanishes modulo the ring relations.
    pub fn is_complex(&self) -> Result<bool> {
        let reducer = RelationReducer::new(&self.ring)?;
        for w in self.differentials.windows(2) {
            let prod = reducer.reduce_matrix(&w[0].mul(&w[1])?);
            if !prod.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Ascending `p`-subsets of `0..r` in lexicographic order.
pub fn exterior_basis(r: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..=r - left {
            cur.push(i);
            rec(i + 1, r, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= r {
        rec(0, r, p, &mut Vec::with_capacity(p), &mut out);
    }
    out
}

/// The Koszul complex of `elements`, with `d(e_S) = Σ_j (-1)^(j-1) f_{s_j} e_{S∖s_j}`.
///
/// When every element is homogeneous (zero counts as degree 0) the basis
/// element `e_S` gets degree `Σ_{i∈S} deg f_i`.
pub fn koszul_complex(elements: &[Polynomial], ring: &RingSpec) -> Result<ChainComplex> {
    koszul_complex_with(elements, ring, &Budget::unlimited())
}

/// [`koszul_complex`] that gives up with `Timeout` once `budget` runs out.
pub fn koszul_complex_with(
    elements: &[Polynomial],
    ring: &RingSpec,
    budget: &Budget,
) -> Result<ChainComplex> {
    for f in elements {
        ring.check(f)?;
    }
    let r = elements.len();
    let bases: Vec<Vec<Vec<usize>>> = (0..=r).map(|p| exterior_basis(r, p)).collect();
    let mut differentials = Vec::with_capacity(r);
    for p in 1..=r {
        budget.check()?;
        let rows = &bases[p - 1];
        let cols = &bases[p];
        let mut d = PolyMatrix::zeros_in(ring, rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            if c % 256 == 0 {
                budget.check()?;
            }
            for (j, &idx) in s.iter().enumerate() {
                if elements[idx].is_zero() {
                    continue;
                }
                let face: Vec<usize> = s.iter().copied().filter(|&k| k != idx).collect();
                let row = rows.binary_search(&face).expect("faces are basis elements");
                let entry = if j % 2 == 0 {
                    elements[idx].clone()
                } else {
                    elements[idx].neg()
                };
                d.set(row, c, entry);
            }
        }
        differentials.push(d);
    }
    let complex = ChainComplex::new(ring.clone(), 1, differentials)?;
    let weights = ring.weights();
    let degs: Option<Vec<i64>> = elements
        .iter()
        .map(|f| {
            if f.is_zero() {
                Some(0)
            } else {
                f.homogeneous_degree(&weights).map(|d| d as i64)
            }
        })
        .collect();
    match degs {
        Some(degs) => {
            let all = bases
                .iter()
                .map(|b| b.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect())
                .collect();
            complex.with_basis_degrees(all)
        }
        None => Ok(complex),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn exterior_basis_is_lexicographic() {
        assert_eq!(
            exterior_basis(3, 2),
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        assert_eq!(exterior_basis(3, 0), vec![Vec::<usize>::new()]);
        assert!(exterior_basis(2, 3).is_empty());
    }

    #[test]
    fn koszul_ranks_are_binomials() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["a", "b", "c", "d"]).unwrap();
        let elems: Vec<_> = (0..4).map(|i| r.var(i)).collect();
        let c = koszul_complex(&elems, &r).unwrap();
        assert_eq!(c.ranks(), &[1, 4, 6, 4, 1]);
        for p in 0..=4 {
            assert_eq!(c.rank(p), binom(4, p));
        }
        assert!(c.is_complex().unwrap());
        assert_eq!(c.basis_degrees(2).unwrap(), &[2; 6]);
    }

    #[test]
    fn koszul_of_two_has_expected_signs() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"]).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let c = koszul_complex(&[x.clone(), y.clone()], &r).unwrap();
        assert_eq!(c.differential(1).unwrap().row(0), &[x.clone(), y.clone()]);
        let d2 = c.differential(2).unwrap();
        assert_eq!((d2.get(0, 0), d2.get(1, 0)), (&y.neg(), &x));
    }

    #[test]
    fn bad_dimensions_rejected() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x"]).unwrap();
        let d = PolyMatrix::zeros_in(&r, 2, 1);
        assert!(ChainComplex::new(r, 1, vec![d]).is_err());
    }
}
