//! Bracket symbols, hat operators, closed-form solutions of the Dirac
//! equation, and their reconstruction.

mod bracket;
mod hat;
mod reconstruct;
mod solution;

pub use bracket::{ad_x_bracket, ad_x_power_xm, bracket, bracket_gamma_reduce, orbits, BracketSpec, Orbit};
pub use hat::{
    f_tilde, hat_apply, hat_del, hat_gamma, hat_gamma_with_sign, hat_product_closed_form, hat_x, hat_x_word_apply, tilde_factor,
    tilde_gamma, tilde_p, y_tilde, HatOperator,
};
pub use reconstruct::{extract_clifford_top, reconstruct, reconstruction_normalization, top_multi_index, Reconstruction, ReconstructionTerm};
pub use solution::{leading_coefficient, solution_coefficient, solution_element, solution_from_indices, Provenance, SolutionJson};
