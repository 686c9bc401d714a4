use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::homology::ModulePresentation;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::rep::{
    check_size, finish, koszul_homology, parse_keyword, select_entries, GenericMatrixPack,
    MatrixTag, RepHomology, RepOptions, Shape,
};
use crate::ring::RingSpec;
use crate::scalar::Field;

/// Matrix Lie algebras used as coefficients: `gl_n`, `sl_n`, strictly upper
/// triangular `n_n`, upper triangular `b_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgType {
    Gl,
    Sl,
    Nilpotent,
    Borel,
}

impl AlgType {
    pub const ALL: [AlgType; 4] = [AlgType::Gl, AlgType::Sl, AlgType::Nilpotent, AlgType::Borel];

    /// Free entries; for `sl` the `(n, n)` entry is minus the other diagonal entries.
    fn shape(self) -> Shape {
        match self {
            AlgType::Gl => Shape::Full,
            AlgType::Sl => Shape::AllButLast,
            AlgType::Nilpotent => Shape::StrictUpper,
            AlgType::Borel => Shape::Upper,
        }
    }

    pub fn dimension(self, n: usize) -> usize {
        self.shape().positions(n).len()
    }
}

impl fmt::Display for AlgType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlgType::Gl => "gl",
            AlgType::Sl => "sl",
            AlgType::Nilpotent => "nilpotent",
            AlgType::Borel => "borel",
        })
    }
}

impl FromStr for AlgType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_keyword(
            s,
            &[
                ("gl", AlgType::Gl),
                ("sl", AlgType::Sl),
                ("nilpotent", AlgType::Nilpotent),
                ("N", AlgType::Nilpotent),
                ("borel", AlgType::Borel),
                ("B", AlgType::Borel),
            ],
            "algebra type",
        )
    }
}

/// Generic matrices of the algebra for `tags` in one polynomial ring.
pub fn generic_alg_matrices(
    ty: AlgType,
    n: usize,
    tags: &[MatrixTag],
    field: Field,
) -> Result<(RingSpec, Vec<GenericMatrixPack>)> {
    check_size(n)?;
    let positions = ty.shape().positions(n);
    let names: Vec<Vec<String>> = tags
        .iter()
        .map(|t| positions.iter().map(|&(i, j)| t.entry_name(i, j)).collect())
        .collect();
    let ring = RingSpec::polynomial_ring(field, &names.iter().flatten().collect::<Vec<_>>())?;
    let packs = tags
        .iter()
        .zip(names)
        .map(|(&tag, variables)| {
            let mut m = PolyMatrix::zeros_in(&ring, n, n);
            for (&(i, j), name) in positions.iter().zip(&variables) {
                m.set(i - 1, j - 1, ring.var_named(name).expect("declared above"));
            }
            if ty == AlgType::Sl {
                let trace = m.trace();
                m.set(n - 1, n - 1, trace.neg());
            }
            GenericMatrixPack {
                tag,
                matrix: m,
                inverse: None,
                variables,
                relations: Vec::new(),
            }
        })
        .collect();
    Ok((ring, packs))
}

pub fn generic_alg_matrix(
    ty: AlgType,
    n: usize,
    tag: MatrixTag,
    field: Field,
) -> Result<(RingSpec, GenericMatrixPack)> {
    let (ring, mut packs) = generic_alg_matrices(ty, n, &[tag], field)?;
    Ok((ring, packs.pop().expect("one tag")))
}

/// `[X_1, Y_1] + ⋯ + [X_g, Y_g]`.
pub fn surface_alg_word(xs: &[GenericMatrixPack], ys: &[GenericMatrixPack]) -> Result<PolyMatrix> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} X matrices and {} Y matrices",
            xs.len(),
            ys.len()
        )));
    }
    let first = &xs[0].matrix;
    let mut w = PolyMatrix::zero(first.rows(), first.cols(), first.nvars(), first.field());
    for (x, y) in xs.iter().zip(ys) {
        let commutator = x.matrix.mul(&y.matrix)?.sub(&y.matrix.mul(&x.matrix)?)?;
        w = w.add(&commutator)?;
    }
    Ok(w)
}

fn alg_elements(ty: AlgType, w: &PolyMatrix) -> Vec<Polynomial> {
    select_entries(w, ty.shape())
}

/// Pruned homology of the Koszul complex on the selected entries of `Σ [X_i, Y_i]`.
pub fn surface_rep_homology_alg(
    n: usize,
    g: usize,
    ty: AlgType,
) -> Result<Vec<ModulePresentation>> {
    finish(surface_rep_homology_alg_with(
        n,
        g,
        ty,
        &RepOptions::default(),
    )?)
}

pub fn surface_rep_homology_alg_with(
    n: usize,
    g: usize,
    ty: AlgType,
    options: &RepOptions,
) -> Result<RepHomology> {
    if g == 0 {
        return Err(Error::InvalidSize("genus must be at least 1".into()));
    }
    let (ring, packs) = generic_alg_matrices(ty, n, &MatrixTag::surface_tags(g), options.field)?;
    let w = surface_alg_word(&packs[..g], &packs[g..])?;
    koszul_homology(ring, alg_elements(ty, &w), options)
}

/// Representation homology of the two-dimensional abelian Lie algebra in
/// `ty`: the single-commutator case `[X, Y]`.
pub fn surface_rep_homology_lie(n: usize, ty: AlgType) -> Result<Vec<ModulePresentation>> {
    surface_rep_homology_alg(n, 1, ty)
}

pub fn surface_rep_homology_lie_with(
    n: usize,
    ty: AlgType,
    options: &RepOptions,
) -> Result<RepHomology> {
    surface_rep_homology_alg_with(n, 1, ty, options)
}
