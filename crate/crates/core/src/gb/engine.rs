//! Buchberger's algorithm on flat module term lists.
//!
//! Two modes share the loop. Plain mode computes a reduced Gröbner basis.
//! Tracked mode works in a graph module `target ⊕ source` under an elimination
//! order: elements whose leading term drops into the source block are kernel
//! elements and are set aside instead of joining the basis.

use std::collections::{BTreeSet, HashSet};

use crate::budget::{verbose, Budget};
use crate::error::Result;
use crate::gb::vector::{ModPoly, Term};
use crate::monomial::{ModuleOrder, Monomial};
use crate::scalar::{Field, Scalar};

#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Stats {
    pub pairs: usize,
    pub product_skips: usize,
    pub chain_skips: usize,
    pub zero_reductions: usize,
}

pub(crate) struct Engine<'b> {
    order: ModuleOrder,
    nvars: usize,
    field: Field,
    split: Option<usize>,
    product_criterion: bool,
    basis: Vec<ModPoly>,
    queue: BTreeSet<(u32, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    syzygies: Vec<ModPoly>,
    budget: &'b Budget,
    stats: Stats,
}

pub(crate) struct Outcome {
    pub basis: Vec<ModPoly>,
    pub syzygies: Vec<ModPoly>,
}

impl<'b> Engine<'b> {
    /// `split`: tracked mode with target positions `0..split`.
    /// `ideal`: all elements live in position 0, enabling the coprime-leads skip.
    pub fn new(
        order: ModuleOrder,
        nvars: usize,
        field: Field,
        split: Option<usize>,
        ideal: bool,
        budget: &'b Budget,
    ) -> Self {
        Engine {
            order,
            nvars,
            field,
            split,
            // the coprime skip is unsound for modules and loses syzygies in tracked mode
            product_criterion: ideal && split.is_none(),
            basis: Vec::new(),
            queue: BTreeSet::new(),
            pending: HashSet::new(),
            syzygies: Vec::new(),
            budget,
            stats: Stats::default(),
        }
    }

    pub fn run(mut self, generators: Vec<ModPoly>) -> Result<Outcome> {
        for g in generators {
            let r = self.reduce(g)?;
            self.accept(r);
        }
        while let Some(key) = self.queue.pop_first() {
            let (_, j, i) = key;
            self.pending.remove(&(i, j));
            self.budget.check()?;
            self.stats.pairs += 1;
            let (li, lj) = (&self.basis[i].terms[0], &self.basis[j].terms[0]);
            if self.product_criterion && li.mono.is_coprime(&lj.mono) {
                self.stats.product_skips += 1;
                continue;
            }
            let lcm = li.mono.lcm(&lj.mono);
            if self.chain_criterion(i, j, &lcm, li.pos) {
                self.stats.chain_skips += 1;
                continue;
            }
            let s = self.s_vector(i, j, &lcm);
            let r = self.reduce(s)?;
            self.accept(r);
        }
        if verbose() {
            eprintln!(
                "[rephom] buchberger: {} pairs, {} coprime skips, {} chain skips, {} zero reductions, basis {}, syzygies {}",
                self.stats.pairs,
                self.stats.product_skips,
                self.stats.chain_skips,
                self.stats.zero_reductions,
                self.basis.len(),
                self.syzygies.len()
            );
        }
        Ok(Outcome {
            basis: self.basis,
            syzygies: self.syzygies,
        })
    }

    fn in_target(&self, pos: usize) -> bool {
        self.split.is_none_or(|s| pos < s)
    }

    fn accept(&mut self, r: ModPoly) {
        match r.lead() {
            None => self.stats.zero_reductions += 1,
            Some(t) if !self.in_target(t.pos) => self.syzygies.push(r),
            Some(_) => self.insert(r),
        }
    }

    fn insert(&mut self, mut h: ModPoly) {
        h.make_monic();
        let k = self.basis.len();
        let lead = &h.terms[0];
        for (i, g) in self.basis.iter().enumerate() {
            let gl = &g.terms[0];
            if gl.pos == lead.pos {
                self.queue.insert((gl.mono.lcm_degree(&lead.mono), k, i));
                self.pending.insert((i, k));
            }
        }
        self.basis.push(h);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Skip (i, j) when some k with matching position has a leading monomial
    /// dividing the lcm and both (i, k) and (j, k) are already treated.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial, pos: usize) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            let t = &g.terms[0];
            k != i
                && k != j
                && t.pos == pos
                && t.mono.divides(lcm)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn s_vector(&self, i: usize, j: usize, lcm: &Monomial) -> ModPoly {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let qi = gi.terms[0]
            .mono
            .quotient_of(lcm)
            .expect("lcm is a multiple");
        let qj = gj.terms[0]
            .mono
            .quotient_of(lcm)
            .expect("lcm is a multiple");
        gi.mul_monomial(&qi)
            .sub_mul_tail(0, &Scalar::one(self.field), &qj, gj, self.order)
    }

    fn reduce(&self, p: ModPoly) -> Result<ModPoly> {
        reduce_against(
            p,
            &self.basis,
            None,
            self.order,
            self.split,
            self.nvars,
            self.budget,
        )
    }
}

/// Reduces every target-block term of `p` by `reducers` (first divisor in list
/// order wins), skipping index `skip`. Source-block terms are left untouched.
pub(crate) fn reduce_against(
    mut p: ModPoly,
    reducers: &[ModPoly],
    skip: Option<usize>,
    order: ModuleOrder,
    split: Option<usize>,
    _nvars: usize,
    budget: &Budget,
) -> Result<ModPoly> {
    let mut start = 0;
    let mut steps = 0usize;
    while start < p.terms.len() {
        let t = &p.terms[start];
        if split.is_some_and(|s| t.pos >= s) {
            break;
        }
        let found = reducers.iter().enumerate().find(|(k, g)| {
            Some(*k) != skip
                && g.terms
                    .first()
                    .is_some_and(|l| l.pos == t.pos && l.mono.divides(&t.mono))
        });
        match found {
            Some((_, g)) => {
                let l = &g.terms[0];
                let q = l.mono.quotient_of(&t.mono).expect("divides");
                let c = if l.coeff.is_one() {
                    t.coeff.clone()
                } else {
                    t.coeff.div(&l.coeff)
                };
                let tail = p.sub_mul_tail(start, &c, &q, g, order);
                p.terms.truncate(start);
                p.terms.extend(tail.terms);
                steps += 1;
                if steps.is_multiple_of(512) {
                    budget.check()?;
                }
            }
            None => start += 1,
        }
    }
    Ok(p)
}

/// Drops elements whose leading term is a multiple of another's, then
/// reduces every tail by the rest and normalises to monic.
pub(crate) fn interreduce(
    basis: Vec<ModPoly>,
    order: ModuleOrder,
    nvars: usize,
    budget: &Budget,
) -> Result<Vec<ModPoly>> {
    let lead = |g: &ModPoly| -> (Monomial, usize) {
        let t: &Term = &g.terms[0];
        (t.mono.clone(), t.pos)
    };
    let leads: Vec<_> = basis.iter().map(lead).collect();
    let kept: Vec<ModPoly> = basis
        .iter()
        .enumerate()
        .filter(|(i, _)| {
            let (mi, pi) = &leads[*i];
            !leads
                .iter()
                .enumerate()
                .any(|(j, (mj, pj))| j != *i && pj == pi && mj.divides(mi) && (mj != mi || j < *i))
        })
        .map(|(_, g)| g.clone())
        .collect();
    let mut out = kept.clone();
    for i in 0..out.len() {
        let mut r = reduce_against(out[i].clone(), &out, Some(i), order, None, nvars, budget)?;
        r.make_monic();
        out[i] = r;
    }
    Ok(out)
}
