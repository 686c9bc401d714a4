//! Ring descriptors: coefficient field, named graded variables, quotient relations.
//! Also the text form of polynomials (rendering and parsing).

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::scalar::{Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
}

/// A polynomial ring over an exact field, optionally modulo `relations`.
///
/// Relations are plain data; they are folded into submodule generators by the
/// Gröbner engine whenever a computation happens over the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingSpec {
    field: Field,
    variables: Vec<Variable>,
    relations: Vec<Polynomial>,
    index: HashMap<String, usize>,
}

/// Builds a ring, rejecting duplicate names, non-positive degrees, and
/// relations that do not live in the declared variables.
pub fn make_ring<S: AsRef<str>>(
    field: Field,
    names: &[S],
    degrees: &[i64],
    relations: Vec<Polynomial>,
) -> Result<RingSpec> {
    if names.len() != degrees.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} names but {} degrees",
            names.len(),
            degrees.len()
        )));
    }
    let mut index = HashMap::new();
    let mut variables = Vec::with_capacity(names.len());
    for (i, (n, &d)) in names.iter().zip(degrees).enumerate() {
        let name = n.as_ref().to_string();
        if d <= 0 || d > u32::MAX as i64 {
            return Err(Error::InvalidDegree { name, degree: d });
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateVariable(name));
        }
        variables.push(Variable {
            name,
            degree: d as u32,
        });
    }
    let ring = RingSpec {
        field,
        variables,
        relations: Vec::new(),
        index,
    };
    ring.with_relations(relations)
}

impl RingSpec {
    /// Same variables, all weights one, no relations.
    pub fn polynomial_ring<S: AsRef<str>>(field: Field, names: &[S]) -> Result<RingSpec> {
        make_ring(field, names, &vec![1; names.len()], Vec::new())
    }

    /// Replaces the quotient relations (zero relations are dropped).
    pub fn with_relations(mut self, relations: Vec<Polynomial>) -> Result<RingSpec> {
        for r in &relations {
            self.check(r)?;
        }
        self.relations = relations.into_iter().filter(|r| !r.is_zero()).collect();
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn variable_names(&self) -> impl Iterator<Item = &str> {
        self.variables.iter().map(|v| v.name.as_str())
    }

    pub fn weights(&self) -> Vec<u32> {
        self.variables.iter().map(|v| v.degree).collect()
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn has_relations(&self) -> bool {
        !self.relations.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::variable(i, self.nvars(), self.field)
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        self.index_of(name)
            .map(|i| self.var(i))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.field)
    }

    pub fn constant(&self, c: i64) -> Polynomial {
        Polynomial::from_i64(c, self.nvars(), self.field)
    }

    /// Checks that `p` is a polynomial of this ring.
    pub fn check(&self, p: &Polynomial) -> Result<()> {
        if p.field() != self.field {
            return Err(Error::RingMismatch);
        }
        if p.nvars() != self.nvars() {
            return Err(Error::UnknownVariable(format!(
                "polynomial in {} variables does not belong to a ring with {}",
                p.nvars(),
                self.nvars()
            )));
        }
        Ok(())
    }

    /// Renders with explicit `*` between factors (the machine-readable form).
    pub fn render(&self, p: &Polynomial) -> String {
        self.render_with(p, true)
    }

    /// Renders by juxtaposition, as in `x_(1,2,3)y_(1,1,2)`.
    pub fn render_compact(&self, p: &Polynomial) -> String {
        self.render_with(p, false)
    }

    fn render_with(&self, p: &Polynomial, stars: bool) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let sep = if stars { "*" } else { "" };
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let negative = c.is_negative();
            if negative {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            let abs = if negative { c.neg() } else { c.clone() };
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.variables[i].name.clone()),
                    _ => factors.push(format!("{}^{}", self.variables[i].name, e)),
                }
            }
            let _ = write!(out, "{}", factors.join(sep));
        }
        out
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial) -> impl fmt::Display + 'a {
        struct D<'a>(&'a RingSpec, &'a Polynomial);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, p)
    }

    /// Parses the text form produced by [`RingSpec::render`] (and ordinary
    /// arithmetic expressions over the ring's variable names).
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let mut p = Parser {
            ring: self,
            src: text.as_bytes(),
            pos: 0,
        };
        let value = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.variable_names().collect();
        write!(f, "{}[{}]", self.field, names.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| self.render(r)).collect();
            write!(f, "/({})", rels.join(", "))?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    ring: &'a RingSpec,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.ring.zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            first = false;
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.factor()?;
                    let c = f.constant_value().filter(|c| !c.is_zero());
                    match c {
                        Some(c) => acc = acc.scale(&c.inv()),
                        None => return Err(self.error("division only by nonzero constants")),
                    }
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    let f = self.factor()?;
                    acc = acc.mul(&f);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let e: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .ok()
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| self.error("expected a non-negative integer exponent"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                let n: BigInt = digits.parse().map_err(|_| self.error("bad integer"))?;
                let r = Rational::from_bigint(n);
                let c = Scalar::from_rational(&r, self.ring.field())
                    .expect("integer maps into every field");
                Ok(Polynomial::constant(c, self.ring.nvars()))
            }
            Some(_) => {
                // longest variable name matching here
                let rest = &self.src[self.pos..];
                let best = self
                    .ring
                    .variables()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| rest.starts_with(v.name.as_bytes()))
                    .max_by_key(|(_, v)| v.name.len());
                match best {
                    Some((i, v)) => {
                        self.pos += v.name.len();
                        Ok(Polynomial::monomial(
                            Monomial::variable(self.ring.nvars(), i),
                            Scalar::one(self.ring.field()),
                            self.ring.field(),
                        ))
                    }
                    None => {
                        let end = rest
                            .iter()
                            .position(|c| !(c.is_ascii_alphanumeric() || *c == b'_'))
                            .unwrap_or(rest.len())
                            .max(1);
                        let word = String::from_utf8_lossy(&rest[..end]).into_owned();
                        Err(Error::UnknownVariable(word))
                    }
                }
            }
        }
    }
}
