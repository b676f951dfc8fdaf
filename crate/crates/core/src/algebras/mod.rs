//! Built-in presentations and their structure maps.
//!
//! The quantum plane, the bigon (quantum SL₂), R_q[GL₂] and the triangle
//! are available over every coefficient ring, together with their ω = +1
//! and character-variety counterparts. Hopf maps, comodule maps along the
//! triangle's edges and the rotation are [`Morphism`](crate::Morphism)s.

mod builtin;
mod checks;
mod matrix;
mod structure;

pub use builtin::{
    bigon_index, builtin, c_const, mutated_bigon, relations, triangle_index, Builtin, BIGON_ORDER, INITIAL_HORIZON,
    TRIANGLE_LETTERS, TRIANGLE_STATE_ORDER,
};
pub use matrix::Matrix2;
pub use structure::{
    algebra, antipode, bigon_gen, bigon_matrix, comodule, coproduct, counit, det_q, partner_bigon,
    multiply_slots, respects_relations, rotation, source, target, triangle_gen, Surface, triangle_matrix, triangle_states, Edge, Side,
};
pub use checks::{
    comodule_check, confluence_check, det_q_check, hopf_check, mutated_bigon_check, plus1_triangle_check,
    relations_check, rotation_check,
};
