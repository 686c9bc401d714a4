//! Gröbner bases of ideals and of submodules of free modules, normal forms,
//! syzygies, kernels and lifts.
//!
//! Quotient rings are never modelled directly: a ring's relations are folded
//! in as extra generators `relation · e_i`, one per free-module position.

mod engine;
mod ideal;
mod syzygy;
mod vector;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::ring::RingSpec;
use crate::scalar::Field;

pub use ideal::{ideal_contains, ideal_equals, ideal_gb, ideal_gb_with, RelationReducer};
pub use syzygy::{kernel_of_map, kernel_of_map_with, lift_through, TrackedBasis};
pub use vector::FreeVector;

pub(crate) use engine::{interreduce, reduce_against, Engine};
pub(crate) use vector::ModPoly;

/// A reduced Gröbner basis of a submodule of `R^rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    rank: usize,
    nvars: usize,
    field: Field,
    order: MonomialOrder,
    elements: Vec<ModPoly>,
    relations_folded: bool,
}

/// Gröbner basis of the submodule generated by `gens` (plus folded ring relations).
///
/// All generators must share one rank; an empty list is the zero submodule of `R^0`.
pub fn buchberger(
    gens: &[FreeVector],
    ring: &RingSpec,
    order: MonomialOrder,
) -> Result<GroebnerBasis> {
    let rank = gens.first().map_or(0, FreeVector::rank);
    GroebnerBasis::of_submodule(rank, gens, ring, order, &Budget::unlimited())
}

impl GroebnerBasis {
    pub fn of_submodule(
        rank: usize,
        gens: &[FreeVector],
        ring: &RingSpec,
        order: MonomialOrder,
        budget: &Budget,
    ) -> Result<GroebnerBasis> {
        let morder = ModuleOrder::new(order);
        let mut input = Vec::with_capacity(gens.len() + rank * ring.relations().len());
        for g in gens {
            if g.rank() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "generator of rank {} in R^{rank}",
                    g.rank()
                )));
            }
            if g.nvars() != ring.nvars() || g.field() != ring.field() {
                return Err(Error::RingMismatch);
            }
            input.push(ModPoly::from_vector(g, morder));
        }
        for rel in ring.relations() {
            for i in 0..rank {
                let v = FreeVector::unit(i, rank, ring.nvars(), ring.field()).scale(rel);
                input.push(ModPoly::from_vector(&v, morder));
            }
        }
        let engine = Engine::new(morder, ring.nvars(), ring.field(), None, rank == 1, budget);
        let outcome = engine.run(input)?;
        let elements = interreduce(outcome.basis, morder, ring.nvars(), budget)?;
        Ok(GroebnerBasis {
            rank,
            nvars: ring.nvars(),
            field: ring.field(),
            order,
            elements,
            relations_folded: ring.has_relations(),
        })
    }

    fn module_order(&self) -> ModuleOrder {
        ModuleOrder::new(self.order)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn relations_folded(&self) -> bool {
        self.relations_folded
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> Vec<FreeVector> {
        self.elements
            .iter()
            .map(|g| g.to_vector(0, self.rank, self.nvars, self.field, self.module_order()))
            .collect()
    }

    /// Leading (monomial, position) of each element, in basis order.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elements
            .iter()
            .map(|g| (g.terms[0].mono.clone(), g.terms[0].pos))
            .collect()
    }

    fn check_vector(&self, v: &FreeVector) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::DimensionMismatch(format!(
                "vector of rank {} against basis in R^{}",
                v.rank(),
                self.rank
            )));
        }
        if v.nvars() != self.nvars || v.field() != self.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// Fully reduced remainder; no term is divisible by any leading term.
    pub fn normal_form(&self, v: &FreeVector) -> Result<FreeVector> {
        self.check_vector(v)?;
        let order = self.module_order();
        let p = ModPoly::from_vector(v, order);
        let r = reduce_against(
            p,
            &self.elements,
            None,
            order,
            None,
            self.nvars,
            &Budget::unlimited(),
        )?;
        Ok(r.to_vector(0, self.rank, self.nvars, self.field, order))
    }

    pub fn contains(&self, v: &FreeVector) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }

    /// Checks the Buchberger criterion (every S-vector reduces to zero) and
    /// auto-reducedness (no leading term divides another).
    pub fn verify(&self) -> bool {
        let order = self.module_order();
        let budget = Budget::unlimited();
        for (i, a) in self.elements.iter().enumerate() {
            for (j, b) in self.elements.iter().enumerate() {
                let (la, lb) = (&a.terms[0], &b.terms[0]);
                if i != j && la.pos == lb.pos && la.mono.divides(&lb.mono) {
                    return false;
                }
                if j <= i || la.pos != lb.pos {
                    continue;
                }
                let lcm = la.mono.lcm(&lb.mono);
                let qa = la.mono.quotient_of(&lcm).expect("multiple");
                let qb = lb.mono.quotient_of(&lcm).expect("multiple");
                let ca = la.coeff.inv();
                let cb = lb.coeff.inv();
                let mut s = a.mul_monomial(&qa);
                s.scale(&ca);
                let s = s.sub_mul_tail(0, &cb, &qb, b, order);
                match reduce_against(s, &self.elements, None, order, None, self.nvars, &budget) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Whether the basis contains every standard basis vector, i.e. spans `R^rank`.
    pub fn is_whole_module(&self) -> bool {
        (0..self.rank).all(|i| {
            self.elements
                .iter()
                .any(|g| g.terms[0].pos == i && g.terms[0].mono.is_one())
        })
    }
}
