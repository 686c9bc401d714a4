use std::collections::HashSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::gb::RelationReducer;
use crate::homology::complex::exterior_basis;
use crate::homology::presentation::ModulePresentation;
use crate::poly::Polynomial;

/// Generators of the `i`-th Fitting ideal: the `(k - i)`-minors of the
/// relation matrix, `k` the number of generators.
///
/// The unit ideal when `k - i <= 0`; the zero ideal (returned as `[0]`) when
/// the minor size exceeds the matrix or every minor vanishes.
pub fn fitting_ideal(p: &ModulePresentation, i: usize) -> Result<Vec<Polynomial>> {
    fitting_ideal_with(p, i, &Budget::unlimited())
}

/// [`fitting_ideal`], checking `budget` before every minor.
pub fn fitting_ideal_with(
    p: &ModulePresentation,
    i: usize,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let ring = p.ring();
    let k = p.generator_rank();
    if i >= k {
        return Ok(vec![ring.one()]);
    }
    let size = k - i;
    let rel = p.relations();
    if size > rel.cols() {
        return Ok(vec![ring.zero()]);
    }
    let reducer = RelationReducer::new(ring)?;
    let mut minors: Vec<Polynomial> = Vec::new();
    let mut seen = HashSet::new();
    for rows in exterior_basis(rel.rows(), size) {
        for cols in exterior_basis(rel.cols(), size) {
            budget.check()?;
            let det = rel.submatrix(&rows, &cols).determinant()?;
            let det = reducer.reduce(&det);
            if det.is_zero() {
                continue;
            }
            let det = det.monic();
            if det.is_one() {
                return Ok(vec![det]);
            }
            if seen.insert(det.clone()) {
                minors.push(det);
            }
        }
    }
    if minors.is_empty() {
        minors.push(ring.zero());
    }
    Ok(minors)
}

/// Fitting ideals `Fitt_0 ..= Fitt_k`.
pub fn fitting_ideals(p: &ModulePresentation) -> Result<Vec<Vec<Polynomial>>> {
    fitting_ideals_with(p, &Budget::unlimited())
}

pub fn fitting_ideals_with(
    p: &ModulePresentation,
    budget: &Budget,
) -> Result<Vec<Vec<Polynomial>>> {
    (0..=p.generator_rank())
        .map(|i| fitting_ideal_with(p, i, budget))
        .collect()
}
