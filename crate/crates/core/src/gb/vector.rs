use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{ModuleOrder, Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::scalar::{Field, Scalar};

/// An element of a free module `R^rank`, one polynomial per position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeVector {
    nvars: usize,
    field: Field,
    entries: Vec<Polynomial>,
}

impl FreeVector {
    pub fn new(entries: Vec<Polynomial>, nvars: usize, field: Field) -> Result<FreeVector> {
        if entries
            .iter()
            .any(|p| p.nvars() != nvars || p.field() != field)
        {
            return Err(Error::RingMismatch);
        }
        Ok(FreeVector {
            nvars,
            field,
            entries,
        })
    }

    /// Convenience for non-empty entry lists.
    pub fn from_entries(entries: Vec<Polynomial>) -> FreeVector {
        let p = entries
            .first()
            .expect("FreeVector::from_entries needs at least one entry");
        let (nvars, field) = (p.nvars(), p.field());
        FreeVector::new(entries, nvars, field).expect("entries from one ring")
    }

    pub fn zero(rank: usize, nvars: usize, field: Field) -> FreeVector {
        FreeVector {
            nvars,
            field,
            entries: vec![Polynomial::zero(nvars, field); rank],
        }
    }

    pub fn unit(i: usize, rank: usize, nvars: usize, field: Field) -> FreeVector {
        let mut v = FreeVector::zero(rank, nvars, field);
        v.entries[i] = Polynomial::one(nvars, field);
        v
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn entry(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn add(&self, other: &FreeVector) -> Result<FreeVector> {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &FreeVector) -> Result<FreeVector> {
        self.combine(other, |a, b| a - b)
    }

    fn combine(
        &self,
        other: &FreeVector,
        f: impl Fn(&Polynomial, &Polynomial) -> Polynomial,
    ) -> Result<FreeVector> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch(format!(
                "ranks {} and {}",
                self.rank(),
                other.rank()
            )));
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| f(a, b))
            .collect();
        Ok(FreeVector {
            nvars: self.nvars,
            field: self.field,
            entries,
        })
    }

    pub fn scale(&self, p: &Polynomial) -> FreeVector {
        FreeVector {
            entries: self.entries.iter().map(|e| e.mul(p)).collect(),
            ..self.clone()
        }
    }

    /// Greatest term under `order`: (monomial, position, coefficient).
    pub fn leading_term(&self, order: ModuleOrder) -> Option<(Monomial, usize, Scalar)> {
        let mp = ModPoly::from_vector(self, order);
        mp.lead().map(|t| (t.mono.clone(), t.pos, t.coeff.clone()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    pub mono: Monomial,
    pub pos: usize,
    pub coeff: Scalar,
}

/// Flat term list of a free-module element, strictly descending in a module order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct ModPoly {
    pub terms: Vec<Term>,
}

impl ModPoly {
    pub fn from_vector(v: &FreeVector, order: ModuleOrder) -> ModPoly {
        ModPoly::from_vector_shifted(v, 0, order)
    }

    /// Places `v` at positions `offset..offset + rank`.
    pub fn from_vector_shifted(v: &FreeVector, offset: usize, order: ModuleOrder) -> ModPoly {
        let mut terms: Vec<Term> = v
            .entries
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms().iter().map(move |(m, c)| Term {
                    mono: m.clone(),
                    pos: i + offset,
                    coeff: c.clone(),
                })
            })
            .collect();
        terms.sort_by(|a, b| order.compare(&b.mono, b.pos, &a.mono, a.pos));
        ModPoly { terms }
    }

    /// Entries at positions `offset..offset + rank`; other positions are ignored.
    pub fn to_vector(
        &self,
        offset: usize,
        rank: usize,
        nvars: usize,
        field: Field,
        order: ModuleOrder,
    ) -> FreeVector {
        let mut buckets: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            if t.pos >= offset && t.pos < offset + rank {
                buckets[t.pos - offset].push((t.mono.clone(), t.coeff.clone()));
            }
        }
        let entries = buckets
            .into_iter()
            .map(|b| {
                if order.monomial == MonomialOrder::Grevlex {
                    Polynomial::from_sorted_terms(nvars, field, b)
                } else {
                    Polynomial::from_terms(nvars, field, b)
                }
            })
            .collect();
        FreeVector {
            nvars,
            field,
            entries,
        }
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&mut self, c: &Scalar) {
        for t in &mut self.terms {
            t.coeff = t.coeff.mul(c);
        }
    }

    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.inv();
                self.scale(&inv);
            }
        }
    }

    /// `self[from..] - c·m·g`, merged; terms before `from` are dropped.
    pub fn sub_mul_tail(
        &self,
        from: usize,
        c: &Scalar,
        m: &Monomial,
        g: &ModPoly,
        order: ModuleOrder,
    ) -> ModPoly {
        let a = &self.terms[from..];
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut scaled: Option<Term> = None;
        loop {
            if scaled.is_none() && j < b.len() {
                let t = &b[j];
                scaled = Some(Term {
                    mono: t.mono.mul(m),
                    pos: t.pos,
                    coeff: t.coeff.mul(c),
                });
                j += 1;
            }
            match (a.get(i), scaled.as_ref()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    let s = scaled.take().expect("checked");
                    out.push(Term {
                        coeff: s.coeff.neg(),
                        ..s
                    });
                }
                (Some(x), Some(s)) => match order.compare(&x.mono, x.pos, &s.mono, s.pos) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        let s = scaled.take().expect("checked");
                        out.push(Term {
                            coeff: s.coeff.neg(),
                            ..s
                        });
                    }
                    Ordering::Equal => {
                        let v = x.coeff.sub(&s.coeff);
                        if !v.is_zero() {
                            out.push(Term {
                                mono: x.mono.clone(),
                                pos: x.pos,
                                coeff: v,
                            });
                        }
                        i += 1;
                        scaled = None;
                    }
                },
            }
        }
        ModPoly { terms: out }
    }

    /// `m·self`, which keeps the order.
    pub fn mul_monomial(&self, m: &Monomial) -> ModPoly {
        ModPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    mono: t.mono.mul(m),
                    pos: t.pos,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }
}
