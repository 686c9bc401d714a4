//! Generic matrices of matrix groups and matrix algebras, surface words, and
//! the Koszul complexes whose homology is representation homology.

mod alg;
mod group;

use std::fmt;

pub use alg::{
    generic_alg_matrices, generic_alg_matrix, surface_alg_word, surface_rep_homology_alg,
    surface_rep_homology_alg_with, surface_rep_homology_lie, surface_rep_homology_lie_with,
    AlgType,
};
pub use group::{
    generic_group_matrices, generic_group_matrix, koszul_generators, surface_rep_homology_group,
    surface_rep_homology_group_with, surface_word, surface_word_with, GroupType,
};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::homology::{
    homology_all, koszul_complex_with, ChainComplex, HomologyOptions, ModulePresentation,
};
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::RingSpec;
use crate::scalar::Field;

/// Which generic matrix a variable belongs to: `X_k` or `Y_k` (1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixTag {
    X(usize),
    Y(usize),
}

impl MatrixTag {
    pub fn letter(self) -> char {
        match self {
            MatrixTag::X(_) => 'x',
            MatrixTag::Y(_) => 'y',
        }
    }

    pub fn index(self) -> usize {
        match self {
            MatrixTag::X(k) | MatrixTag::Y(k) => k,
        }
    }

    /// Name of the entry variable at 1-based `(i, j)`, e.g. `x_(1,2,3)`.
    pub fn entry_name(self, i: usize, j: usize) -> String {
        format!("{}_({},{},{})", self.letter(), self.index(), i, j)
    }

    /// `X_1, ..., X_g, Y_1, ..., Y_g`.
    pub fn surface_tags(g: usize) -> Vec<MatrixTag> {
        (1..=g)
            .map(MatrixTag::X)
            .chain((1..=g).map(MatrixTag::Y))
            .collect()
    }
}

impl fmt::Display for MatrixTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter().to_ascii_uppercase(), self.index())
    }
}

/// A generic matrix with its inverse (absent for algebras), the variables
/// it introduced and the ring relations those variables satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrixPack {
    pub tag: MatrixTag,
    pub matrix: PolyMatrix,
    pub inverse: Option<PolyMatrix>,
    pub variables: Vec<String>,
    pub relations: Vec<Polynomial>,
}

/// Which entries of an `n × n` matrix are free (1-based positions, row-major).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    StrictUpper,
    Upper,
    Full,
    AllButLast,
}

impl Shape {
    pub fn positions(self, n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                let keep = match self {
                    Shape::StrictUpper => i < j,
                    Shape::Upper => i <= j,
                    Shape::Full => true,
                    Shape::AllButLast => (i, j) != (n, n),
                };
                if keep {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Order of the Koszul sequence: triangular shapes go superdiagonal by
    /// superdiagonal (so deeper commutator terms come last), full shapes row-major.
    pub fn sequence_positions(self, n: usize) -> Vec<(usize, usize)> {
        let mut pos = self.positions(n);
        if matches!(self, Shape::StrictUpper | Shape::Upper) {
            pos.sort_by_key(|&(i, j)| (j - i, i));
        }
        pos
    }
}

/// Entries of `w` at `shape`'s positions, in sequence order.
pub(crate) fn select_entries(w: &PolyMatrix, shape: Shape) -> Vec<Polynomial> {
    shape
        .sequence_positions(w.rows())
        .into_iter()
        .map(|(i, j)| w.get(i - 1, j - 1).clone())
        .collect()
}

pub(crate) fn check_size(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidSize(format!(
            "matrix size must be at least 2, got {n}"
        )));
    }
    Ok(())
}

/// Settings shared by every end-to-end computation.
#[derive(Clone, Copy, Debug)]
pub struct RepOptions {
    pub field: Field,
    pub prune: bool,
    pub budget: Budget,
}

impl Default for RepOptions {
    fn default() -> Self {
        RepOptions {
            field: Field::Rational,
            prune: true,
            budget: Budget::unlimited(),
        }
    }
}

/// Everything produced by an end-to-end computation.
#[derive(Clone, Debug)]
pub struct RepHomology {
    pub ring: RingSpec,
    /// The sequence the Koszul complex is built on.
    pub elements: Vec<Polynomial>,
    pub complex: ChainComplex,
    /// `H_0, H_1, ...`; shorter than `complex.top() + 1` when truncated.
    pub homology: Vec<ModulePresentation>,
    pub truncated: bool,
}

pub(crate) fn koszul_homology(
    ring: RingSpec,
    elements: Vec<Polynomial>,
    options: &RepOptions,
) -> Result<RepHomology> {
    let complex = koszul_complex_with(&elements, &ring, &options.budget)?;
    let report = homology_all(
        &complex,
        &HomologyOptions {
            prune: options.prune,
            budget: options.budget,
        },
    )?;
    Ok(RepHomology {
        ring,
        elements,
        complex,
        homology: report.modules,
        truncated: report.truncated,
    })
}

pub(crate) fn finish(result: RepHomology) -> Result<Vec<ModulePresentation>> {
    if result.truncated {
        return Err(Error::Timeout);
    }
    Ok(result.homology)
}

pub(crate) fn parse_keyword<T: Copy>(s: &str, table: &[(&str, T)], what: &str) -> Result<T> {
    table
        .iter()
        .find(|(k, _)| k.eq_ignore_ascii_case(s))
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::Parse {
            position: 0,
            message: format!("unknown {what} '{s}'"),
        })
}
