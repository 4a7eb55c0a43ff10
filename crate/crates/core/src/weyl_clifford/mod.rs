//! The Weyl–Clifford superalgebra `W(2n|n)` in normal order `x`, `∂`, `γ`.

mod element;
pub mod monomial;
mod osp;
mod parse;

pub use element::{WCElement, WCTermJson};
pub use monomial::{Exps, Monomial};
pub use osp::{ad_ry, ad_x, verify_adjoint_suite, verify_osp_suite, Osp};
pub(crate) use osp::truncate;
pub use parse::parse_wc;
