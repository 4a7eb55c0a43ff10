//! The diamond product on the double coset space `A′/(g₋A′ + A′g₊)`.

use std::fmt;
use std::sync::Arc;

use super::hcoeff::HCoeffElement;
use super::projector::phi;
use crate::clifford::Metric;
use crate::error::Error;
use crate::scalar::{RatH, Scalar};
use crate::weyl_clifford::{Osp, WCElement};

/// A representative of a class in `A′/(g₋A′ + A′g₊)`.
///
/// Equality of classes is semantic (see [`super::coset_eq`]); the derived
/// equality here compares representatives.
#[derive(Clone, PartialEq, Eq)]
pub struct CosetRep {
    pub rep: HCoeffElement,
}

impl CosetRep {
    pub fn new(rep: HCoeffElement) -> Self {
        CosetRep { rep }
    }

    pub fn from_wc(a: &WCElement) -> Self {
        CosetRep { rep: HCoeffElement::from_wc(a) }
    }

    pub fn one(metric: &Arc<Metric>) -> Self {
        Self::rath(metric, RatH::one())
    }

    pub fn zero(metric: &Arc<Metric>) -> Self {
        CosetRep { rep: HCoeffElement::zero(metric) }
    }

    /// The class of `φ(H)`.
    pub fn rath(metric: &Arc<Metric>, f: RatH) -> Self {
        CosetRep { rep: HCoeffElement::rath(metric, f) }
    }

    pub fn metric(&self) -> &Arc<Metric> {
        self.rep.metric()
    }

    /// `φ(H)·ā`, which is also `φ̄(H) ◇ ā`.
    pub fn left_mul(&self, f: &RatH) -> Self {
        CosetRep { rep: self.rep.left_mul(f) }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        CosetRep { rep: self.rep.scale(s) }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(CosetRep { rep: self.rep.try_add(&rhs.rep)? })
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.try_add(&rhs.scale(&Scalar::from_int(-1)))
    }

    /// `ā ◇ b̄ = Σ_k ad_r(Y)^k(a) · φ_k(H−k) · ad(X)^k(b)`.
    ///
    /// The sum is finite: `ad(X)` is nilpotent on every monomial and
    /// `ad_r(Y)` is nilpotent modulo `g₋A′`.
    pub fn diamond(&self, rhs: &Self) -> Result<Self, Error> {
        Self::diamond_with(&Osp::new(self.metric()), self, rhs)
    }

    /// [`Self::diamond`] with precomputed embedding data.
    pub fn diamond_with(osp: &Osp, a: &Self, b: &Self) -> Result<Self, Error> {
        if a.metric() != b.metric() {
            return Err(Error::ContextMismatch);
        }
        let mut left = a.rep.clone();
        let mut right = b.rep.clone();
        let mut out = a.rep.try_mul(&b.rep)?;
        for k in 1.. {
            left = left.ad_ry_reduced(osp)?;
            right = right.ad_x_reduced(osp)?;
            if left.is_zero() || right.is_zero() {
                break;
            }
            let middle = HCoeffElement::rath(a.metric(), phi(k).shift(-(k as i64)));
            out = out.try_add(&left.try_mul(&middle)?.try_mul(&right)?)?;
        }
        Ok(CosetRep { rep: out })
    }
}

impl fmt::Display for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for CosetRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}
