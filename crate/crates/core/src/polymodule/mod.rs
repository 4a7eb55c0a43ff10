//! The module `V` of Clifford-valued polynomials.

mod kernel;
mod poly;
mod projector;

pub use kernel::{dirac_kernel, expected_kernel_dim, graded_keys, right_generators, spans, BasisJson, Coordinates, MonogenicBasis};
pub use poly::{h_eigenvalue, CliffordPolynomial, PolyKey, PolyTermJson};
pub use projector::{extremal_projector, truncated_projector, truncation_scalar};
