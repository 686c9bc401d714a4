//! Polynomial arithmetic, Gröbner bases and homology of representation
//! schemes of surface groups and link groups.

pub mod budget;
pub mod error;
pub mod gb;
pub mod homology;
pub mod link;
pub mod matrix;
pub mod monomial;
pub mod poly;
pub mod rep;
pub mod ring;
pub mod scalar;

pub use budget::Budget;
pub use error::{Error, Result};
pub use gb::{
    buchberger, ideal_contains, ideal_equals, ideal_gb, ideal_gb_with, kernel_of_map,
    kernel_of_map_with, lift_through, FreeVector, GroebnerBasis, RelationReducer, TrackedBasis,
};
pub use homology::{
    fitting_ideal, fitting_ideal_with, fitting_ideals, fitting_ideals_with, hilbert_function,
    homology_all, homology_at, homology_at_with, is_zero_module, is_zero_module_with,
    koszul_complex, prune, ChainComplex, HilbertFunctionVector, HomologyOptions, HomologyReport,
    ModulePresentation,
};
pub use link::{
    braid_generator_action, braid_word_action, braid_word_action_with, link_koszul_elements,
    link_rep_homology, link_rep_homology_with, make_link, Link, LinkModel, Strand,
};
pub use matrix::PolyMatrix;
pub use monomial::{compare_monomials, ModuleOrder, Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use rep::{
    generic_alg_matrix, generic_group_matrix, koszul_generators, surface_rep_homology_alg,
    surface_rep_homology_alg_with, surface_rep_homology_group, surface_rep_homology_group_with,
    surface_rep_homology_lie, surface_rep_homology_lie_with, surface_word, surface_word_with,
    AlgType, GenericMatrixPack, GroupType, MatrixTag, RepHomology, RepOptions,
};
pub use ring::{make_ring, RingSpec, Variable};
pub use scalar::{Field, Rational, Scalar};
