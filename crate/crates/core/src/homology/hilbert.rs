use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::homology::presentation::{vector_degree, ModulePresentation};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// `h(0..=D)` of a graded cokernel, with the generator degrees used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunctionVector {
    pub values: Vec<u64>,
    pub shifts: Vec<i64>,
}

/// Dimensions over the field of the graded pieces of the cokernel, degree by degree.
///
/// Generators sit in their declared degrees (zero when none are declared);
/// every relation column and every ring relation must be homogeneous.
pub fn hilbert_function(p: &ModulePresentation, max_degree: u32) -> Result<HilbertFunctionVector> {
    let ring = p.ring();
    let weights = ring.weights();
    let shifts: Vec<i64> = p
        .generator_degrees()
        .map_or_else(|| vec![0; p.generator_rank()], <[i64]>::to_vec);
    let rel = p.relations();
    let mut columns: Vec<(i64, Vec<Polynomial>)> = Vec::new();
    for j in 0..rel.cols() {
        let col = rel.column(j);
        if col.iter().all(Polynomial::is_zero) {
            continue;
        }
        let d = vector_degree(&col, &shifts, &weights).ok_or(Error::NotHomogeneous)?;
        columns.push((d, col));
    }
    let mut ring_relations: Vec<(i64, &Polynomial)> = Vec::new();
    for r in ring.relations() {
        let d = r
            .homogeneous_degree(&weights)
            .ok_or(Error::NotHomogeneous)?;
        ring_relations.push((d as i64, r));
    }

    let mut values = Vec::with_capacity(max_degree as usize + 1);
    for d in 0..=max_degree as i64 {
        let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
        for (pos, s) in shifts.iter().enumerate() {
            if d >= *s {
                for m in monomials_of_degree(&weights, (d - s) as u64) {
                    let n = index.len();
                    index.insert((pos, m), n);
                }
            }
        }
        let mut echelon = Echelon::default();
        let push = |pos: usize, mult: &Monomial, f: &Polynomial, row: &mut Vec<(usize, Scalar)>| {
            for (m, c) in f.terms() {
                let key = (pos, m.mul(mult));
                row.push((index[&key], c.clone()));
            }
        };
        for (cd, col) in &columns {
            if *cd > d {
                continue;
            }
            for m in monomials_of_degree(&weights, (d - cd) as u64) {
                let mut row = Vec::new();
                for (pos, f) in col.iter().enumerate() {
                    push(pos, &m, f, &mut row);
                }
                echelon.insert(row);
            }
        }
        for (rd, r) in &ring_relations {
            for (pos, s) in shifts.iter().enumerate() {
                if d - s < *rd {
                    continue;
                }
                for m in monomials_of_degree(&weights, (d - s - rd) as u64) {
                    let mut row = Vec::new();
                    push(pos, &m, r, &mut row);
                    echelon.insert(row);
                }
            }
        }
        values.push((index.len() - echelon.rank) as u64);
    }
    Ok(HilbertFunctionVector { values, shifts })
}

/// Row echelon form of sparse vectors, used only to count rank.
#[derive(Default)]
struct Echelon {
    pivots: HashMap<usize, Vec<(usize, Scalar)>>,
    rank: usize,
}

impl Echelon {
    fn insert(&mut self, mut row: Vec<(usize, Scalar)>) {
        row.sort_by_key(|(c, _)| *c);
        loop {
            let Some((lead, v)) = row.first().cloned() else {
                return;
            };
            match self.pivots.get(&lead) {
                Some(p) => row = sub_scaled(&row, &v, p),
                None => {
                    let inv = v.inv();
                    let row = row.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
                    self.pivots.insert(lead, row);
                    self.rank += 1;
                    return;
                }
            }
        }
    }
}

/// `a - c·b` for column-sorted sparse rows.
fn sub_scaled(a: &[(usize, Scalar)], c: &Scalar, b: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, b[j].1.mul(c).neg()));
            j += 1;
        } else {
            let v = a[i].1.sub(&b[j].1.mul(c));
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
