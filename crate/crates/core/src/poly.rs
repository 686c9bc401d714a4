//! Sparse multivariate polynomials in canonical (grevlex-descending) form.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::scalar::{Field, Scalar};

/// Polynomials are always kept sorted by this order.
pub(crate) const CANONICAL: MonomialOrder = MonomialOrder::Grevlex;

/// A polynomial: strictly descending grevlex terms, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field) -> Polynomial {
        Polynomial {
            nvars,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Scalar, nvars: usize) -> Polynomial {
        let field = c.field();
        Polynomial::monomial(Monomial::one(nvars), c, field)
    }

    pub fn from_i64(c: i64, nvars: usize, field: Field) -> Polynomial {
        Polynomial::constant(Scalar::from_i64(c, field), nvars)
    }

    pub fn one(nvars: usize, field: Field) -> Polynomial {
        Polynomial::from_i64(1, nvars, field)
    }

    pub fn variable(index: usize, nvars: usize, field: Field) -> Polynomial {
        Polynomial::monomial(Monomial::variable(nvars, index), Scalar::one(field), field)
    }

    pub fn monomial(m: Monomial, c: Scalar, field: Field) -> Polynomial {
        let nvars = m.nvars();
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(
        nvars: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Polynomial {
        let mut acc: HashMap<Monomial, Scalar> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match acc.get_mut(&m) {
                Some(v) => *v = v.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| CANONICAL.compare(&b.0, &a.0));
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted_terms(
        nvars: usize,
        field: Field,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| CANONICAL.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            nvars,
            field,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this is a constant (including zero).
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.as_slice() {
            [] => Some(Scalar::zero(self.field)),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_nonzero_constant(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, _)] if m.is_one())
    }

    pub fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(m, c)] if m.is_one() && c.is_one())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Weighted degree if every term has the same one. The zero polynomial has none.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> Option<u64> {
        let mut it = self.terms.iter().map(|(m, _)| m.weighted_degree(weights));
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self, weights: &[u32]) -> bool {
        self.is_zero() || self.homogeneous_degree(weights).is_some()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.add(other))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        Ok(self.mul(other))
    }

    /// Panics if the operands live in different rings; see [`Polynomial::checked_add`].
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, &Scalar::one(self.field))
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add_scaled(other, &Scalar::from_i64(-1, self.field))
    }

    /// `self + c·other` by merging the two sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: &Scalar) -> Polynomial {
        assert!(
            self.nvars == other.nvars && self.field == other.field,
            "polynomial ring mismatch"
        );
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match CANONICAL.compare(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), b[j].1.mul(c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = a[i].1.add(&b[j].1.mul(c));
                    if !v.is_zero() {
                        out.push((a[i].0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, v)| (m.clone(), v.mul(c))));
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Scalar::from_i64(-1, self.field))
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, v)| (m.clone(), v.mul(c)))
            .collect();
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, v)| (t.mul(m), v.mul(c)))
            .collect();
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert!(
            self.nvars == other.nvars && self.field == other.field,
            "polynomial ring mismatch"
        );
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let v = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.add(&v),
                    None => {
                        acc.insert(m, v);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| CANONICAL.compare(&b.0, &a.0));
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut result = Polynomial::one(self.nvars, self.field);
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Replaces variable `i` by `images[i]` for every variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "substitution needs {} images, got {}",
                self.nvars,
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => (p.nvars, p.field),
            None => (0, self.field),
        };
        if images.iter().any(|p| (p.nvars, p.field) != target) {
            return Err(Error::RingMismatch);
        }
        let mut cache: HashMap<(usize, u16), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(target.0, target.1);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone(), target.0);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as u32))
                    .clone();
                t = t.mul(&p);
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Indices of variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.nvars];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        used.iter()
            .enumerate()
            .filter(|(_, &u)| u)
            .map(|(i, _)| i)
            .collect()
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
