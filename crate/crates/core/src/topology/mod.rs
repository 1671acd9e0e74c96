//! Burning configuration spaces and their simplicial homology.

mod complex;
mod homology;
mod matrix;

pub use complex::{
    complex_faces, config_space, is_subcomplex, strong_config_space, SimplicialComplex,
};
pub use homology::{boundary_matrix, homology, Coefficients, HomologyError, HomologyResult};
pub use matrix::{smith_normal_form, IntegerMatrix, SmithForm};
