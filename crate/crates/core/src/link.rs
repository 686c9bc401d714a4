//! Links as closed braids, the braid group action on tuples of generic
//! matrices, and the Koszul complexes computing link representation homology.

use std::fmt;
use std::str::FromStr;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::gb::RelationReducer;
use crate::homology::ModulePresentation;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::rep::{
    finish, generic_group_matrices, koszul_generators, koszul_homology, GroupType, MatrixTag,
    RepHomology, RepOptions,
};
use crate::ring::RingSpec;

/// A link given as the closure of a braid on `braid_index` strands. Word
/// entry `i` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Link {
    braid_index: usize,
    word: Vec<i32>,
}

pub fn make_link(braid_index: usize, word: Vec<i32>) -> Result<Link> {
    if braid_index == 0 {
        return Err(Error::InvalidLink("braid index must be at least 1".into()));
    }
    for &w in &word {
        if w == 0 || w.unsigned_abs() as usize >= braid_index {
            return Err(Error::InvalidLink(format!(
                "word entry {w} out of range for braid index {braid_index}"
            )));
        }
    }
    Ok(Link { braid_index, word })
}

impl Link {
    pub fn trefoil() -> Link {
        Link {
            braid_index: 2,
            word: vec![1, 1, 1],
        }
    }

    pub fn figure_eight() -> Link {
        Link {
            braid_index: 3,
            word: vec![1, -2, 1, -2],
        }
    }

    pub fn unknot() -> Link {
        Link {
            braid_index: 1,
            word: Vec::new(),
        }
    }

    pub fn braid_index(&self) -> usize {
        self.braid_index
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word: Vec<String> = self.word.iter().map(i32::to_string).collect();
        write!(f, "link({}, {{{}}})", self.braid_index, word.join(","))
    }
}

impl FromStr for Link {
    type Err = Error;

    /// Accepts `trefoil`, `figure-eight`, `unknot` or `link(n, {w1,...,wk})`.
    fn from_str(s: &str) -> Result<Link> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.to_ascii_lowercase().as_str() {
            "trefoil" => return Ok(Link::trefoil()),
            "figure-eight" | "figureeight" | "figure_eight" => return Ok(Link::figure_eight()),
            "unknot" => return Ok(Link::unknot()),
            _ => {}
        }
        let bad = |position: usize, message: &str| Error::Parse {
            position,
            message: message.to_string(),
        };
        let body = compact
            .strip_prefix("link(")
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| bad(0, "expected link(n, {w1,...,wk})"))?;
        let (n, rest) = body
            .split_once(',')
            .ok_or_else(|| bad(5, "expected a comma after the braid index"))?;
        let n: usize = n
            .parse()
            .map_err(|_| bad(5, "braid index is not a non-negative integer"))?;
        let list = rest
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| bad(6 + n.to_string().len(), "expected {...} word"))?;
        let word = if list.is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|w| {
                    w.parse::<i32>()
                        .map_err(|_| bad(0, &format!("bad word entry '{w}'")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        make_link(n, word)
    }
}

/// A matrix together with its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub matrix: PolyMatrix,
    pub inverse: PolyMatrix,
}

struct Mult<'a> {
    reducer: &'a RelationReducer,
    budget: &'a Budget,
}

impl Mult<'_> {
    fn product(&self, factors: &[&PolyMatrix]) -> Result<PolyMatrix> {
        let mut acc = factors[0].clone();
        for f in &factors[1..] {
            acc = self
                .reducer
                .reduce_matrix_with(&acc.mul_with(f, self.budget)?, self.budget)?;
        }
        Ok(acc)
    }
}

fn generator_action(i: usize, sign: i8, xs: &[Strand], mult: &Mult) -> Result<Vec<Strand>> {
    if i == 0 || i >= xs.len() {
        return Err(Error::InvalidLink(format!(
            "generator {i} out of range for {} strands",
            xs.len()
        )));
    }
    let (a, b) = (&xs[i - 1], &xs[i]);
    let (new_a, new_b) = match sign {
        1 => (
            Strand {
                matrix: mult.product(&[&a.matrix, &b.matrix, &a.inverse])?,
                inverse: mult.product(&[&a.matrix, &b.inverse, &a.inverse])?,
            },
            a.clone(),
        ),
        -1 => (
            b.clone(),
            Strand {
                matrix: mult.product(&[&b.inverse, &a.matrix, &b.matrix])?,
                inverse: mult.product(&[&b.inverse, &a.inverse, &b.matrix])?,
            },
        ),
        _ => {
            return Err(Error::InvalidLink(format!(
                "sign must be 1 or -1, got {sign}"
            )))
        }
    };
    let mut out = xs.to_vec();
    out[i - 1] = new_a;
    out[i] = new_b;
    Ok(out)
}

/// `σ_i` (sign 1) or `σ_i⁻¹` (sign -1) acting on a tuple; `i` is 1-based.
///
/// `σ_i: X_i ↦ X_i X_{i+1} X_i⁻¹, X_{i+1} ↦ X_i` and
/// `σ_i⁻¹: X_i ↦ X_{i+1}, X_{i+1} ↦ X_{i+1}⁻¹ X_i X_{i+1}`.
pub fn braid_generator_action(
    i: usize,
    sign: i8,
    xs: &[Strand],
    ring: &RingSpec,
) -> Result<Vec<Strand>> {
    let reducer = RelationReducer::new(ring)?;
    generator_action(
        i,
        sign,
        xs,
        &Mult {
            reducer: &reducer,
            budget: &Budget::unlimited(),
        },
    )
}

/// The action of the whole braid word, first entry applied first.
pub fn braid_word_action(link: &Link, xs: &[Strand], ring: &RingSpec) -> Result<Vec<Strand>> {
    braid_word_action_with(link, xs, ring, &Budget::unlimited())
}

/// [`braid_word_action`], checking `budget` before each letter.
pub fn braid_word_action_with(
    link: &Link,
    xs: &[Strand],
    ring: &RingSpec,
    budget: &Budget,
) -> Result<Vec<Strand>> {
    if xs.len() != link.braid_index {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for braid index {}",
            xs.len(),
            link.braid_index
        )));
    }
    let reducer = RelationReducer::new(ring)?;
    let mult = Mult {
        reducer: &reducer,
        budget,
    };
    let mut cur = xs.to_vec();
    for &w in &link.word {
        budget.check()?;
        cur = generator_action(w.unsigned_abs() as usize, w.signum() as i8, &cur, &mult)?;
    }
    Ok(cur)
}

/// Which differential the link complex uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum LinkModel {
    /// Independent tuples `X` and `Y`, `dT_i = Y_i - β(X_i)`.
    #[default]
    TwoTuple,
    /// A single tuple `Y`, `dT_i = Y_i - β(Y_i)`: the fixed points of the braid action.
    FixedPoint,
}

impl fmt::Display for LinkModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LinkModel::TwoTuple => "two-tuple",
            LinkModel::FixedPoint => "fixed-point",
        })
    }
}

impl FromStr for LinkModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two-tuple" => Ok(LinkModel::TwoTuple),
            "fixed-point" => Ok(LinkModel::FixedPoint),
            _ => Err(Error::Parse {
                position: 0,
                message: format!("unknown link model '{s}'"),
            }),
        }
    }
}

/// The ring and the Koszul sequence of the link complex.
pub fn link_koszul_elements(
    link: &Link,
    n: usize,
    ty: GroupType,
    model: LinkModel,
    options: &RepOptions,
) -> Result<(RingSpec, Vec<Polynomial>)> {
    let m = link.braid_index;
    let tags: Vec<MatrixTag> = match model {
        LinkModel::TwoTuple => (1..=m)
            .map(MatrixTag::X)
            .chain((1..=m).map(MatrixTag::Y))
            .collect(),
        LinkModel::FixedPoint => (1..=m).map(MatrixTag::Y).collect(),
    };
    let (ring, packs) = generic_group_matrices(ty, n, &tags, options.field)?;
    let strands: Vec<Strand> = packs
        .iter()
        .map(|p| Strand {
            matrix: p.matrix.clone(),
            inverse: p.inverse.clone().expect("groups have inverses"),
        })
        .collect();
    // the braid acts on the first tuple; the differential compares with the last
    let targets = &strands[strands.len() - m..];
    let moved = braid_word_action_with(link, &strands[..m], &ring, &options.budget)?;
    let mut elements = Vec::with_capacity(m * ty.dimension(n));
    for (y, bx) in targets.iter().zip(&moved) {
        elements.extend(koszul_generators(ty, &y.matrix.sub(&bx.matrix)?));
    }
    Ok((ring, elements))
}

/// Pruned representation homology of the link complement, default model.
pub fn link_rep_homology(link: &Link, n: usize, ty: GroupType) -> Result<Vec<ModulePresentation>> {
    finish(link_rep_homology_with(
        link,
        n,
        ty,
        LinkModel::default(),
        &RepOptions::default(),
    )?)
}

pub fn link_rep_homology_with(
    link: &Link,
    n: usize,
    ty: GroupType,
    model: LinkModel,
    options: &RepOptions,
) -> Result<RepHomology> {
    let (ring, elements) = link_koszul_elements(link, n, ty, model, options)?;
    koszul_homology(ring, elements, options)
}
