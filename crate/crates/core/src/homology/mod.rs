//! Chain complexes of free modules, Koszul complexes, homology as explicit
//! cokernel presentations, pruning, Hilbert functions and Fitting ideals.

mod complex;
mod fitting;
mod hilbert;
mod presentation;

pub use complex::{exterior_basis, koszul_complex, koszul_complex_with, ChainComplex};
pub use fitting::{fitting_ideal, fitting_ideal_with, fitting_ideals, fitting_ideals_with};
pub use hilbert::{hilbert_function, HilbertFunctionVector};
pub use presentation::{
    homology_all, homology_at, homology_at_with, is_zero_module, is_zero_module_with, prune,
    HomologyOptions, HomologyReport, ModulePresentation,
};
