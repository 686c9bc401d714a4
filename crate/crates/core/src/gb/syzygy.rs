use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gb::engine::{reduce_against, Engine};
use crate::gb::ideal::RelationReducer;
use crate::gb::vector::{FreeVector, ModPoly};
use crate::matrix::PolyMatrix;
use crate::monomial::{ModuleOrder, MonomialOrder};
use crate::ring::RingSpec;
use crate::scalar::Field;

/// Gröbner basis of the graph module of `R^m -> R^r`, `e_k ↦ g_k`.
///
/// Keeps enough bookkeeping to write any element of the image as a
/// combination of the original generators, and to read off generators of
/// the kernel.
#[derive(Clone, Debug)]
pub struct TrackedBasis {
    target_rank: usize,
    source_rank: usize,
    nvars: usize,
    field: Field,
    order: ModuleOrder,
    basis: Vec<ModPoly>,
    syzygies: Vec<FreeVector>,
    budget: Budget,
}

impl TrackedBasis {
    pub fn new(
        generators: &[FreeVector],
        target_rank: usize,
        ring: &RingSpec,
    ) -> Result<TrackedBasis> {
        TrackedBasis::with_budget(generators, target_rank, ring, &Budget::unlimited())
    }

    pub fn with_budget(
        generators: &[FreeVector],
        target_rank: usize,
        ring: &RingSpec,
        budget: &Budget,
    ) -> Result<TrackedBasis> {
        let (nvars, field) = (ring.nvars(), ring.field());
        let m = generators.len();
        let order = ModuleOrder::elimination(MonomialOrder::Grevlex, target_rank);
        let mut input = Vec::with_capacity(m + target_rank * ring.relations().len());
        for (k, g) in generators.iter().enumerate() {
            if g.rank() != target_rank {
                return Err(Error::DimensionMismatch(format!(
                    "generator {k} has rank {} not {target_rank}",
                    g.rank()
                )));
            }
            if g.nvars() != nvars || g.field() != field {
                return Err(Error::RingMismatch);
            }
            let mut p = ModPoly::from_vector(g, order);
            p.terms.extend(
                ModPoly::from_vector_shifted(
                    &FreeVector::unit(k, m, nvars, field),
                    target_rank,
                    order,
                )
                .terms,
            );
            input.push(p);
        }
        for rel in ring.relations() {
            for i in 0..target_rank {
                let v = FreeVector::unit(i, target_rank, nvars, field).scale(rel);
                input.push(ModPoly::from_vector(&v, order));
            }
        }
        let engine = Engine::new(order, nvars, field, Some(target_rank), false, budget);
        let outcome = engine.run(input)?;

        let reducer = RelationReducer::new(ring)?;
        let mut syzygies: Vec<FreeVector> = Vec::new();
        for s in &outcome.syzygies {
            let v = s.to_vector(target_rank, m, nvars, field, order);
            let v = reducer.reduce_vector(&v);
            if v.is_zero() {
                continue;
            }
            let v = normalize_sign(v);
            if !syzygies.contains(&v) {
                syzygies.push(v);
            }
        }
        Ok(TrackedBasis {
            target_rank,
            source_rank: m,
            nvars,
            field,
            order,
            basis: outcome.basis,
            syzygies,
            budget: *budget,
        })
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    /// Generators of the kernel of `R^m -> R^r` (modulo the ring relations).
    pub fn syzygies(&self) -> &[FreeVector] {
        &self.syzygies
    }

    /// Gröbner basis of the image, restricted to target coordinates.
    pub fn image_basis(&self) -> Vec<FreeVector> {
        self.basis
            .iter()
            .map(|g| g.to_vector(0, self.target_rank, self.nvars, self.field, self.order))
            .collect()
    }

    /// Coefficients `c` with `Σ c_k g_k = v` modulo the ring relations.
    pub fn lift(&self, v: &FreeVector) -> Result<FreeVector> {
        if v.rank() != self.target_rank {
            return Err(Error::DimensionMismatch(format!(
                "vector of rank {} not {}",
                v.rank(),
                self.target_rank
            )));
        }
        if v.nvars() != self.nvars || v.field() != self.field {
            return Err(Error::RingMismatch);
        }
        let p = ModPoly::from_vector(v, self.order);
        let r = reduce_against(
            p,
            &self.basis,
            None,
            self.order,
            Some(self.target_rank),
            self.nvars,
            &self.budget,
        )?;
        if r.lead().is_some_and(|t| t.pos < self.target_rank) {
            return Err(Error::NotInSpan);
        }
        let c = r.to_vector(
            self.target_rank,
            self.source_rank,
            self.nvars,
            self.field,
            self.order,
        );
        let entries = c.into_entries().iter().map(|e| e.neg()).collect();
        FreeVector::new(entries, self.nvars, self.field)
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool> {
        match self.lift(v) {
            Ok(_) => Ok(true),
            Err(Error::NotInSpan) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// Scales so the leading coefficient of the first nonzero entry is positive
/// (over the rationals); leaves prime-field vectors alone.
fn normalize_sign(v: FreeVector) -> FreeVector {
    let negative = v
        .entries()
        .iter()
        .find(|p| !p.is_zero())
        .and_then(|p| p.leading_term())
        .is_some_and(|(_, c)| c.is_negative());
    if negative {
        let (nvars, field) = (v.nvars(), v.field());
        FreeVector::new(
            v.into_entries().iter().map(|p| p.neg()).collect(),
            nvars,
            field,
        )
        .expect("same ring")
    } else {
        v
    }
}

/// Columns generating the kernel of the map given by the columns of `m`.
pub fn kernel_of_map(m: &PolyMatrix, ring: &RingSpec) -> Result<PolyMatrix> {
    kernel_of_map_with(m, ring, &Budget::unlimited())
}

pub fn kernel_of_map_with(m: &PolyMatrix, ring: &RingSpec, budget: &Budget) -> Result<PolyMatrix> {
    let gens = matrix_columns(m)?;
    let tb = TrackedBasis::with_budget(&gens, m.rows(), ring, budget)?;
    vectors_to_matrix(m.cols(), tb.syzygies(), ring)
}

/// Coefficient matrix `C` with `G·C = targets` (modulo relations), where `G`
/// is the generator matrix tracked by `tb`.
pub fn lift_through(targets: &PolyMatrix, tb: &TrackedBasis) -> Result<PolyMatrix> {
    let mut cols = Vec::with_capacity(targets.cols());
    for j in 0..targets.cols() {
        let v = FreeVector::new(targets.column(j), targets.nvars(), targets.field())?;
        cols.push(tb.lift(&v)?.into_entries());
    }
    PolyMatrix::from_columns(tb.source_rank(), &cols, targets.nvars(), targets.field())
}

pub(crate) fn matrix_columns(m: &PolyMatrix) -> Result<Vec<FreeVector>> {
    (0..m.cols())
        .map(|j| FreeVector::new(m.column(j), m.nvars(), m.field()))
        .collect()
}

pub(crate) fn vectors_to_matrix(
    rows: usize,
    vs: &[FreeVector],
    ring: &RingSpec,
) -> Result<PolyMatrix> {
    let cols: Vec<Vec<_>> = vs.iter().map(|v| v.entries().to_vec()).collect();
    PolyMatrix::from_columns(rows, &cols, ring.nvars(), ring.field())
}
