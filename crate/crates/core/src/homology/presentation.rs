use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gb::{kernel_of_map_with, FreeVector, GroebnerBasis, RelationReducer, TrackedBasis};
use crate::homology::complex::ChainComplex;
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Field;

/// The cokernel of `relations: R^m -> R^generator_rank`, over a ring whose
/// quotient relations are implicitly in force.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    ring: RingSpec,
    generator_rank: usize,
    relations: PolyMatrix,
    homological_degree: i64,
    generator_degrees: Option<Vec<i64>>,
}

impl ModulePresentation {
    pub fn new(
        ring: RingSpec,
        relations: PolyMatrix,
        homological_degree: i64,
    ) -> Result<ModulePresentation> {
        if relations.nvars() != ring.nvars() || relations.field() != ring.field() {
            return Err(Error::RingMismatch);
        }
        Ok(ModulePresentation {
            generator_rank: relations.rows(),
            ring,
            relations,
            homological_degree,
            generator_degrees: None,
        })
    }

    /// The free module of rank `rank`.
    pub fn free(ring: RingSpec, rank: usize, homological_degree: i64) -> ModulePresentation {
        let relations = PolyMatrix::zeros_in(&ring, rank, 0);
        ModulePresentation {
            ring,
            generator_rank: rank,
            relations,
            homological_degree,
            generator_degrees: None,
        }
    }

    /// Declares internal degrees of the generators.
    pub fn with_generator_degrees(mut self, degrees: Vec<i64>) -> Result<ModulePresentation> {
        if degrees.len() != self.generator_rank {
            return Err(Error::DimensionMismatch(format!(
                "{} generator degrees for {} generators",
                degrees.len(),
                self.generator_rank
            )));
        }
        self.generator_degrees = Some(degrees);
        Ok(self)
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generator_rank(&self) -> usize {
        self.generator_rank
    }

    pub fn relations(&self) -> &PolyMatrix {
        &self.relations
    }

    pub fn homological_degree(&self) -> i64 {
        self.homological_degree
    }

    pub fn generator_degrees(&self) -> Option<&[i64]> {
        self.generator_degrees.as_deref()
    }

    /// True when there are no relations at all (a free module on the generators).
    pub fn is_free(&self) -> bool {
        self.relations.cols() == 0 || self.relations.is_zero()
    }

    fn relation_vectors(&self) -> Vec<FreeVector> {
        (0..self.relations.cols())
            .map(|j| {
                FreeVector::new(
                    self.relations.column(j),
                    self.ring.nvars(),
                    self.ring.field(),
                )
                .expect("same ring")
            })
            .collect()
    }

    /// Gröbner basis of the relation submodule, ring relations folded.
    pub fn relation_basis(&self, budget: &Budget) -> Result<GroebnerBasis> {
        GroebnerBasis::of_submodule(
            self.generator_rank,
            &self.relation_vectors(),
            &self.ring,
            MonomialOrder::Grevlex,
            budget,
        )
    }
}

/// Whether every generator reduces to zero against the relations.
pub fn is_zero_module(p: &ModulePresentation) -> Result<bool> {
    is_zero_module_with(p, &Budget::unlimited())
}

pub fn is_zero_module_with(p: &ModulePresentation, budget: &Budget) -> Result<bool> {
    if p.generator_rank == 0 {
        return Ok(true);
    }
    if p.relations.cols() == 0 {
        // free of positive rank, unless the ring itself is zero
        if !p.ring.has_relations() {
            return Ok(false);
        }
    }
    Ok(p.relation_basis(budget)?.is_whole_module())
}

/// `H_p` of `c` as the cokernel of relations among generators of `ker d_p`.
pub fn homology_at(c: &ChainComplex, p: usize) -> Result<ModulePresentation> {
    homology_at_with(c, p, &Budget::unlimited())
}

pub fn homology_at_with(c: &ChainComplex, p: usize, budget: &Budget) -> Result<ModulePresentation> {
    if p > c.top() {
        return Err(Error::DimensionMismatch(format!(
            "degree {p} above top {}",
            c.top()
        )));
    }
    let ring = c.ring();
    let rank = c.rank(p);
    let kernel = match c.differential(p) {
        Some(d) => kernel_of_map_with(d, ring, budget)?,
        None => PolyMatrix::identity(rank, ring.nvars(), ring.field()),
    };
    let gens: Vec<FreeVector> = (0..kernel.cols())
        .map(|j| FreeVector::new(kernel.column(j), ring.nvars(), ring.field()))
        .collect::<Result<_>>()?;
    let z = gens.len();
    let tracked = TrackedBasis::with_budget(&gens, rank, ring, budget)?;
    let mut columns: Vec<Vec<Polynomial>> = tracked
        .syzygies()
        .iter()
        .map(|s| s.entries().to_vec())
        .collect();
    if let Some(next) = c.differential(p + 1) {
        for j in 0..next.cols() {
            let v = FreeVector::new(next.column(j), ring.nvars(), ring.field())?;
            match tracked.lift(&v) {
                Ok(coeffs) => columns.push(coeffs.into_entries()),
                Err(Error::NotInSpan) => return Err(Error::NotAComplex),
                Err(e) => return Err(e),
            }
        }
    }
    let relations = PolyMatrix::from_columns(z, &columns, ring.nvars(), ring.field())?;
    let pres = ModulePresentation::new(ring.clone(), relations, p as i64)?;
    match c
        .basis_degrees(p)
        .and_then(|degs| kernel_degrees(&kernel, degs, &ring.weights()))
    {
        Some(d) => pres.with_generator_degrees(d),
        None => Ok(pres),
    }
}

/// Degrees of homogeneous kernel columns, if every column is homogeneous.
fn kernel_degrees(kernel: &PolyMatrix, basis: &[i64], weights: &[u32]) -> Option<Vec<i64>> {
    (0..kernel.cols())
        .map(|j| vector_degree(&kernel.column(j), basis, weights))
        .collect()
}

/// The common degree `deg(v_i) + shift_i` of a homogeneous vector; `Some(0)` for zero.
pub(crate) fn vector_degree(v: &[Polynomial], shifts: &[i64], weights: &[u32]) -> Option<i64> {
    let mut deg = None;
    for (p, s) in v.iter().zip(shifts) {
        if p.is_zero() {
            continue;
        }
        let d = p.homogeneous_degree(weights)? as i64 + s;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return None,
            Some(_) => {}
        }
    }
    Some(deg.unwrap_or(0))
}

/// Removes generator/relation pairs joined by a scalar entry until none
/// remain, then drops zero relations and duplicates.
pub fn prune(p: &ModulePresentation) -> ModulePresentation {
    let reducer = RelationReducer::new(&p.ring).expect("ring relations form a valid ideal");
    let rel = reducer.reduce_matrix(&p.relations);
    let mut cols: Vec<Vec<Polynomial>> = rel.columns();
    let mut rows = p.generator_rank;
    let mut degrees = p.generator_degrees.clone();
    loop {
        let pivot = cols.iter().enumerate().find_map(|(j, c)| {
            c.iter()
                .position(Polynomial::is_nonzero_constant)
                .map(|i| (i, j))
        });
        let Some((i, j)) = pivot else { break };
        let pc = cols.remove(j);
        let c_inv = pc[i].constant_value().expect("scalar pivot").inv();
        for col in cols.iter_mut() {
            if !col[i].is_zero() {
                let factor = col[i].scale(&c_inv);
                for (k, e) in col.iter_mut().enumerate() {
                    if k != i && !pc[k].is_zero() {
                        *e = reducer.reduce(&e.sub(&pc[k].mul(&factor)));
                    }
                }
            }
            col.remove(i);
        }
        rows -= 1;
        if let Some(d) = degrees.as_mut() {
            d.remove(i);
        }
    }
    let mut out: Vec<Vec<Polynomial>> = Vec::new();
    for col in cols {
        if col.iter().all(Polynomial::is_zero) {
            continue;
        }
        let col = normalize_column_sign(col, p.ring.field());
        if !out.contains(&col) {
            out.push(col);
        }
    }
    let relations = PolyMatrix::from_columns(rows, &out, p.ring.nvars(), p.ring.field())
        .expect("consistent shape");
    ModulePresentation {
        ring: p.ring.clone(),
        generator_rank: rows,
        relations,
        homological_degree: p.homological_degree,
        generator_degrees: degrees,
    }
}

fn normalize_column_sign(col: Vec<Polynomial>, field: Field) -> Vec<Polynomial> {
    if field != Field::Rational {
        return col;
    }
    let negative = col
        .iter()
        .find(|e| !e.is_zero())
        .and_then(|e| e.leading_term())
        .is_some_and(|(_, c)| c.is_negative());
    if negative {
        col.iter().map(Polynomial::neg).collect()
    } else {
        col
    }
}

/// Options for computing every homology module of a complex.
#[derive(Clone, Copy, Debug)]
pub struct HomologyOptions {
    pub prune: bool,
    pub budget: Budget,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        HomologyOptions {
            prune: true,
            budget: Budget::unlimited(),
        }
    }
}

/// Homology in degrees `0..=top`, stopping early when the budget runs out.
#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub modules: Vec<ModulePresentation>,
    pub truncated: bool,
}

pub fn homology_all(c: &ChainComplex, options: &HomologyOptions) -> Result<HomologyReport> {
    let mut modules = Vec::with_capacity(c.top() + 1);
    for p in 0..=c.top() {
        match homology_at_with(c, p, &options.budget) {
            Ok(h) => modules.push(if options.prune { prune(&h) } else { h }),
            Err(Error::Timeout) => {
                return Ok(HomologyReport {
                    modules,
                    truncated: true,
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(HomologyReport {
        modules,
        truncated: false,
    })
}
