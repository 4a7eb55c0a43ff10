//! Exact symbolic computation in the Weyl–Clifford superalgebra `W(2n|n)`,
//! its `osp(1|2)` oscillator embedding, the extremal projector and diamond
//! product of the associated reduction algebra, and closed-form generation
//! of Clifford-valued polynomial solutions of the massless Dirac equation.
//!
//! Indices are 0-based in the API and 1-based in every rendering and parser.

pub mod clifford;
pub mod coset;
pub mod error;
pub mod linalg;
pub mod monogenic;
pub mod polymodule;
pub mod report;
pub mod scalar;
pub mod suites;
pub mod weyl_clifford;

pub use clifford::{Blade, CliffordElement, IndexKind, Metric};
pub use coset::{CosetRep, HCoeffElement};
pub use error::{Error, Result};
pub use polymodule::{CliffordPolynomial, MonogenicBasis};
pub use report::{Entry, Report, Status};
pub use scalar::{HPoly, RatH, Rational, Scalar};
pub use weyl_clifford::{Monomial, Osp, WCElement};

/// Largest supported number of coordinates.
pub const MAX_DIM: usize = 8;
