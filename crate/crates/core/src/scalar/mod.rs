//! Exact coefficient arithmetic.

mod field;
mod poly;
mod rath;
mod rational;

pub use field::Scalar;
pub use poly::HPoly;
pub use rath::RatH;
pub use rational::Rational;
