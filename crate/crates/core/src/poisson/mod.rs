//! Poisson structures at ω = +1.
//!
//! The skein bracket comes from the first-order commutator of the deformation
//! over `Q[ħ]/ħ²`; the character-variety bracket comes from classical
//! r-matrices. [`PsiMap`] identifies the two algebras.

mod checks;
mod psi;
mod rmatrix;
mod star;
mod table;

pub use checks::{
    bracket_property_check, mutated_psi_check, orientation_flip_check, psi_check, rmatrix_check,
    star_examples_check, theorem3_check,
};
pub use psi::{psi_transport, PsiMap};
pub use rmatrix::{cybe, pair_index, Mat2, RMatrix, E, F, H};
pub use star::star_bracket;
pub use table::{r_matrix_bracket, BracketTable, Orientation};
