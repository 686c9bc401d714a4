use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gb::RelationReducer;
use crate::homology::ModulePresentation;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::rep::{
    check_size, finish, koszul_homology, parse_keyword, select_entries, GenericMatrixPack,
    MatrixTag, RepHomology, RepOptions, Shape,
};
use crate::ring::RingSpec;
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum GroupType {
    #[default]
    GL,
    SL,
    Unipotent,
    Borel,
}

impl GroupType {
    pub const ALL: [GroupType; 4] = [
        GroupType::GL,
        GroupType::SL,
        GroupType::Unipotent,
        GroupType::Borel,
    ];

    fn shape(self) -> Shape {
        match self {
            GroupType::GL | GroupType::SL => Shape::Full,
            GroupType::Unipotent => Shape::StrictUpper,
            GroupType::Borel => Shape::Upper,
        }
    }

    /// Entries of `W` forming the Koszul sequence; as many as the group's dimension.
    fn koszul_shape(self) -> Shape {
        match self {
            GroupType::SL => Shape::AllButLast,
            other => other.shape(),
        }
    }

    pub fn dimension(self, n: usize) -> usize {
        self.koszul_shape().positions(n).len()
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupType::GL => "GL",
            GroupType::SL => "SL",
            GroupType::Unipotent => "Unipotent",
            GroupType::Borel => "Borel",
        })
    }
}

impl FromStr for GroupType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_keyword(
            s,
            &[
                ("GL", GroupType::GL),
                ("SL", GroupType::SL),
                ("Unipotent", GroupType::Unipotent),
                ("U", GroupType::Unipotent),
                ("Borel", GroupType::Borel),
                ("B", GroupType::Borel),
            ],
            "group type",
        )
    }
}

/// Names of the localization variables a matrix of this type needs.
fn localization_names(ty: GroupType, n: usize, tag: MatrixTag) -> Vec<String> {
    let k = tag.index();
    match (ty, tag) {
        (GroupType::GL, MatrixTag::X(_)) => vec![format!("s_{k}")],
        (GroupType::GL, MatrixTag::Y(_)) => vec![format!("t_{k}")],
        (GroupType::Borel, MatrixTag::X(_)) => (1..=n).map(|i| format!("e_({k},{i})")).collect(),
        (GroupType::Borel, MatrixTag::Y(_)) => (1..=n).map(|i| format!("f_({k},{i})")).collect(),
        _ => Vec::new(),
    }
}

/// Generic matrices for `tags` in one shared ring.
///
/// Variables are ordered: entry variables tag by tag (row-major), then the
/// localization variables tag by tag.
pub fn generic_group_matrices(
    ty: GroupType,
    n: usize,
    tags: &[MatrixTag],
    field: Field,
) -> Result<(RingSpec, Vec<GenericMatrixPack>)> {
    check_size(n)?;
    let positions = ty.shape().positions(n);
    let entry_names: Vec<Vec<String>> = tags
        .iter()
        .map(|t| positions.iter().map(|&(i, j)| t.entry_name(i, j)).collect())
        .collect();
    let loc_names: Vec<Vec<String>> = tags.iter().map(|&t| localization_names(ty, n, t)).collect();
    let all: Vec<&String> = entry_names
        .iter()
        .flatten()
        .chain(loc_names.iter().flatten())
        .collect();
    let free = RingSpec::polynomial_ring(field, &all)?;
    let var = |name: &str| free.var_named(name).expect("declared above");

    let mut packs = Vec::with_capacity(tags.len());
    for (t, &tag) in tags.iter().enumerate() {
        let mut m = PolyMatrix::zeros_in(&free, n, n);
        if ty == GroupType::Unipotent {
            for i in 0..n {
                m.set(i, i, free.one());
            }
        }
        for (&(i, j), name) in positions.iter().zip(&entry_names[t]) {
            m.set(i - 1, j - 1, var(name));
        }
        let locs: Vec<Polynomial> = loc_names[t].iter().map(|s| var(s)).collect();
        let (inverse, relations) = match ty {
            GroupType::Unipotent => (unipotent_inverse(&m, &free)?, Vec::new()),
            GroupType::SL => (m.adjugate()?, vec![&m.determinant()? - &free.one()]),
            GroupType::GL => {
                let s = &locs[0];
                (
                    m.adjugate()?.scale(s),
                    vec![&(s * &m.determinant()?) - &free.one()],
                )
            }
            GroupType::Borel => {
                let rels = (0..n)
                    .map(|i| &(m.get(i, i) * &locs[i]) - &free.one())
                    .collect();
                (upper_inverse(&m, &locs, &free), rels)
            }
        };
        let mut variables = entry_names[t].clone();
        variables.extend(loc_names[t].iter().cloned());
        packs.push(GenericMatrixPack {
            tag,
            matrix: m,
            inverse: Some(inverse),
            variables,
            relations,
        });
    }
    let relations: Vec<Polynomial> = packs
        .iter()
        .flat_map(|p| p.relations.iter().cloned())
        .collect();
    let ring = free.with_relations(relations)?;
    Ok((ring, packs))
}

/// A single generic matrix in its own ring.
pub fn generic_group_matrix(
    ty: GroupType,
    n: usize,
    tag: MatrixTag,
    field: Field,
) -> Result<(RingSpec, GenericMatrixPack)> {
    let (ring, mut packs) = generic_group_matrices(ty, n, &[tag], field)?;
    Ok((ring, packs.pop().expect("one tag")))
}

/// `Σ_{m<n} (-N)^m` with `N = U - I`, exact since `N` is nilpotent.
fn unipotent_inverse(u: &PolyMatrix, ring: &RingSpec) -> Result<PolyMatrix> {
    let n = u.rows();
    let id = PolyMatrix::identity(n, ring.nvars(), ring.field());
    let minus_n = id.sub(u)?;
    let mut power = id.clone();
    let mut sum = id;
    for _ in 1..n {
        power = power.mul(&minus_n)?;
        sum = sum.add(&power)?;
    }
    Ok(sum)
}

/// Inverse of an upper-triangular `u` given symbols `e_i` inverting its diagonal:
/// `V_jj = e_j`, `V_ij = -e_i Σ_{i<k<=j} U_ik V_kj`.
fn upper_inverse(u: &PolyMatrix, diag_inv: &[Polynomial], ring: &RingSpec) -> PolyMatrix {
    let n = u.rows();
    let mut v = PolyMatrix::zeros_in(ring, n, n);
    for j in 0..n {
        v.set(j, j, diag_inv[j].clone());
        for i in (0..j).rev() {
            let mut acc = ring.zero();
            for k in i + 1..=j {
                acc = &acc + &(u.get(i, k) * v.get(k, j));
            }
            v.set(i, j, (&diag_inv[i] * &acc).neg());
        }
    }
    v
}

/// `X_1 Y_1 X_1⁻¹ Y_1⁻¹ ⋯ X_g Y_g X_g⁻¹ Y_g⁻¹ − I`, entries in normal form
/// modulo the ring relations.
pub fn surface_word(
    xs: &[GenericMatrixPack],
    ys: &[GenericMatrixPack],
    ring: &RingSpec,
) -> Result<PolyMatrix> {
    surface_word_with(xs, ys, ring, &Budget::unlimited())
}

/// [`surface_word`], checking `budget` between factors.
pub fn surface_word_with(
    xs: &[GenericMatrixPack],
    ys: &[GenericMatrixPack],
    ring: &RingSpec,
    budget: &Budget,
) -> Result<PolyMatrix> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::DimensionMismatch(format!(
            "{} X matrices and {} Y matrices",
            xs.len(),
            ys.len()
        )));
    }
    let n = xs[0].matrix.rows();
    let reducer = RelationReducer::new(ring)?;
    let mut w = PolyMatrix::identity(n, ring.nvars(), ring.field());
    for (x, y) in xs.iter().zip(ys) {
        for (m, inv) in [(x, false), (y, false), (x, true), (y, true)] {
            budget.check()?;
            let factor = if inv {
                m.inverse
                    .as_ref()
                    .ok_or_else(|| Error::InvalidSize(format!("{} has no inverse", m.tag)))?
            } else {
                &m.matrix
            };
            if factor.rows() != n || factor.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch(
                    "matrices of different sizes or rings".into(),
                ));
            }
            w = reducer.reduce_matrix_with(&w.mul_with(factor, budget)?, budget)?;
        }
    }
    w.sub(&PolyMatrix::identity(n, ring.nvars(), ring.field()))
}

/// Entries of `W` forming the Koszul sequence for `ty`, row-major.
pub fn koszul_generators(ty: GroupType, w: &PolyMatrix) -> Vec<Polynomial> {
    select_entries(w, ty.koszul_shape())
}

/// Pruned `HR_0, ..., HR_r` of the genus-`g` surface with coefficients in `ty`.
pub fn surface_rep_homology_group(
    n: usize,
    g: usize,
    ty: GroupType,
) -> Result<Vec<ModulePresentation>> {
    finish(surface_rep_homology_group_with(
        n,
        g,
        ty,
        &RepOptions::default(),
    )?)
}

pub fn surface_rep_homology_group_with(
    n: usize,
    g: usize,
    ty: GroupType,
    options: &RepOptions,
) -> Result<RepHomology> {
    if g == 0 {
        return Err(Error::InvalidSize("genus must be at least 1".into()));
    }
    let (ring, packs) = generic_group_matrices(ty, n, &MatrixTag::surface_tags(g), options.field)?;
    let w = surface_word_with(&packs[..g], &packs[g..], &ring, &options.budget)?;
    let elements = koszul_generators(ty, &w);
    koszul_homology(ring, elements, options)
}
