use crate::budget::Budget;
use crate::error::Result;
use crate::gb::vector::FreeVector;
use crate::gb::GroebnerBasis;
use crate::matrix::PolyMatrix;
use crate::monomial::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::RingSpec;

/// Gröbner basis of the ideal generated by `gens` in `ring` (relations folded in).
pub fn ideal_gb(gens: &[Polynomial], ring: &RingSpec) -> Result<GroebnerBasis> {
    ideal_gb_with(gens, ring, &Budget::unlimited())
}

pub fn ideal_gb_with(
    gens: &[Polynomial],
    ring: &RingSpec,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let vs: Vec<FreeVector> = gens
        .iter()
        .map(|g| {
            ring.check(g)?;
            FreeVector::new(vec![g.clone()], ring.nvars(), ring.field())
        })
        .collect::<Result<_>>()?;
    GroebnerBasis::of_submodule(1, &vs, ring, MonomialOrder::Grevlex, budget)
}

pub fn ideal_contains(gens: &[Polynomial], f: &Polynomial, ring: &RingSpec) -> Result<bool> {
    ring.check(f)?;
    ideal_gb(gens, ring)?.contains(&FreeVector::new(
        vec![f.clone()],
        ring.nvars(),
        ring.field(),
    )?)
}

/// Equality of the ideals generated by `a` and by `b` in `ring`.
pub fn ideal_equals(a: &[Polynomial], b: &[Polynomial], ring: &RingSpec) -> Result<bool> {
    let (ga, gb) = (ideal_gb(a, ring)?, ideal_gb(b, ring)?);
    let inside = |basis: &GroebnerBasis, fs: &[Polynomial]| -> Result<bool> {
        for f in fs {
            if !basis.contains(&FreeVector::new(
                vec![f.clone()],
                ring.nvars(),
                ring.field(),
            )?)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(inside(&gb, a)? && inside(&ga, b)?)
}

/// Normal forms modulo the defining relations of a quotient ring.
#[derive(Clone, Debug)]
pub struct RelationReducer {
    basis: Option<GroebnerBasis>,
}

impl RelationReducer {
    pub fn new(ring: &RingSpec) -> Result<RelationReducer> {
        if !ring.has_relations() {
            return Ok(RelationReducer { basis: None });
        }
        let free =
            RingSpec::polynomial_ring(ring.field(), &ring.variable_names().collect::<Vec<_>>())?;
        Ok(RelationReducer {
            basis: Some(ideal_gb(ring.relations(), &free)?),
        })
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        match &self.basis {
            None => p.clone(),
            Some(gb) => {
                let v = FreeVector::new(vec![p.clone()], p.nvars(), p.field()).expect("one entry");
                gb.normal_form(&v)
                    .expect("ring checked")
                    .into_entries()
                    .pop()
                    .expect("rank one")
            }
        }
    }

    pub fn reduce_vector(&self, v: &FreeVector) -> FreeVector {
        if self.basis.is_none() {
            return v.clone();
        }
        let entries = v.entries().iter().map(|p| self.reduce(p)).collect();
        FreeVector::new(entries, v.nvars(), v.field()).expect("same ring")
    }

    pub fn reduce_matrix(&self, m: &PolyMatrix) -> PolyMatrix {
        if self.basis.is_none() {
            return m.clone();
        }
        m.map(|p| self.reduce(p))
    }

    /// [`RelationReducer::reduce_matrix`], checking `budget` before every entry.
    pub fn reduce_matrix_with(&self, m: &PolyMatrix, budget: &Budget) -> Result<PolyMatrix> {
        if self.basis.is_none() {
            return Ok(m.clone());
        }
        let mut out = m.clone();
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                budget.check()?;
                out.set(i, j, self.reduce(m.get(i, j)));
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn ideal_equality_and_membership() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"]).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        assert!(ideal_equals(&[&x + &y, &x - &y], &[x.clone(), y.clone()], &r).unwrap());
        assert!(!ideal_equals(std::slice::from_ref(&x), &[x.clone(), y.clone()], &r).unwrap());
        assert!(ideal_equals(&[r.one()], &[&x + &r.one(), x.clone()], &r).unwrap());
        assert!(ideal_equals(&[], &[r.zero()], &r).unwrap());
        assert!(ideal_contains(&[x.pow(2), y.clone()], &(&(&x * &x) * &y), &r).unwrap());
        assert!(!ideal_contains(&[x.pow(2)], &x, &r).unwrap());
    }

    #[test]
    fn relation_reducer_normal_forms() {
        let r0 = RingSpec::polynomial_ring(Field::Rational, &["x", "y"]).unwrap();
        let (x, y) = (r0.var(0), r0.var(1));
        let r = r0.clone().with_relations(vec![&x.pow(2) - &y]).unwrap();
        let red = RelationReducer::new(&r).unwrap();
        assert_eq!(red.reduce(&x.pow(3)), &x * &y);
    }
}
