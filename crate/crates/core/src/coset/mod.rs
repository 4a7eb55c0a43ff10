//! The double coset space `A′/(g₋A′ + A′g₊)` and the diamond product.

mod diamond;
mod hcoeff;
mod presentation;
pub mod projector;

pub use diamond::CosetRep;
pub use hcoeff::HCoeffElement;
pub use projector::{kappa, phi, phi_closed, phi_table, psi, psi_with_factors, truncation_factors, ProjectorCoeffs};
pub use presentation::{
    compare, coset_eq, coset_eq_in, diamond_matches_composition, projected_x, verify_associativity, verify_diamond_formulas,
    verify_presentation, Comparison, SolutionSpace,
};
